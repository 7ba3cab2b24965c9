#pragma once

#include "capset/big_fixed.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace capset {

inline constexpr int kDefaultDigits = 40;
inline constexpr int kGuardDigits = 10;

// ---------------------------------------------------------------------------
// P-recursive check for d(n) = C(3n, 2n)_2

/// Polynomial coefficients (c0, c1, c2) of the three-term recurrence
///   c0(n) d(n) + c1(n) d(n+1) + c2(n) d(n+2) = 0
/// satisfied by the central-ish trinomial coefficients d(n) = [x^(2n)] (1+x+x^2)^(3n).
std::array<BigInt, 3> recurrence_coefficients(long n);

struct RecurrenceCheck {
    int n_max = 0;
    bool all_zero = false;
    std::optional<int> first_failure;
};

/// Evaluates the recurrence in exact integers for n = 0 .. n_max-2 on d(n) from qnomial rows.
RecurrenceCheck verify_recurrence(int n_max);
/// Same check on caller-supplied values d(0..n_max); used for falsification controls.
RecurrenceCheck verify_recurrence(std::span<const BigInt> values);

/// The d(n) sequence itself, n = 0..n_max.
std::vector<BigInt> trinomial_diagonal(int n_max);

// ---------------------------------------------------------------------------
// Closed forms for q = 3

/// Largest root of 1024 N^2 - 22356 N + 19683, i.e. (5589 + 891 sqrt(33)) / 512.
BigFixed characteristic_root(int digits);
/// Cube root of characteristic_root: the exponential growth rate for q = 3.
BigFixed alpha(int digits);

// ---------------------------------------------------------------------------
// Saddle point for general q

struct SaddleResult {
    int q = 0;
    BigFixed x0;        ///< root in (0,1) of sum_j (3j - (q-1)) x^j
    BigFixed constant;  ///< f(x0) * x0^(-(q-1)/3), f = 1 + x + ... + x^(q-1)
    BigFixed residual;  ///< |sum_j (3j - (q-1)) x0^j| at working precision
};

/// Minimizer of f(x) x^(-(q-1)/3) on (0,1) by bisection then Newton, results rounded to `digits`.
SaddleResult saddle_point(int q, int digits = kDefaultDigits);
/// Growth constant of [z^((q-1)n/3)] f(z)^n: saddle_point(q).constant.
BigFixed growth_constant(int q, int digits = kDefaultDigits);

struct RatioEstimate {
    int q = 0;
    int n_low = 0;
    int n_high = 0;
    BigFixed ratio_low;     ///< (a(n_low) / a(n_low - 3))^(1/3)
    BigFixed ratio_high;    ///< (a(n_high) / a(n_high - 3))^(1/3)
    BigFixed extrapolated;  ///< one Richardson step in 1/n on the interval midpoints
};

/// Growth constant from exact coefficients a(n) = [x^((q-1)n/3)] f(x)^n at multiples of 3,
/// independent of the saddle computation. n_max must be a multiple of 3 and at least 30.
RatioEstimate growth_constant_ratio(int q, int n_max);

// ---------------------------------------------------------------------------
// Sub-exponential constant for the q = 3 bound

/// C with sharp_bound(n) ~ C alpha^n / sqrt(n):
///   C = (3 / (1 - x0) - 1) / sqrt(2 pi x0 mu'(x0)),  mu(x) = x f'(x) / f(x), f = 1 + x + x^2.
BigFixed leading_constant(int digits = kDefaultDigits);

/// sharp_bound(n) sqrt(n) alpha^-n, exact bound, high-precision alpha. n divisible by 3.
BigFixed normalized_sharp_bound(int n, int scale = kDefaultDigits);

struct ConstantExtrapolation {
    std::vector<int> ns;
    std::vector<BigFixed> samples;  ///< normalized_sharp_bound at each n
    BigFixed extrapolated;          ///< full Richardson table in 1/n over doubling n
};

/// Richardson extrapolation of normalized_sharp_bound over n, 2n, 4n, ... (each a multiple of 3).
ConstantExtrapolation extrapolate_leading_constant(std::span<const int> ns);

/// c1 in sharp_bound(n) sqrt(n) alpha^-n / C = 1 + c1/n + O(1/n^2), from e(n) = n (ratio - 1)
/// at n_max/2 and n_max with one Richardson step: 2 e(n_max) - e(n_max/2).
/// n_max must be a multiple of 6 and at least 600.
double first_correction_estimate(int n_max);

}  // namespace capset
