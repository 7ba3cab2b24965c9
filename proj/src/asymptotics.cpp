#include "capset/asymptotics.hpp"

#include "capset/bounds.hpp"
#include "capset/errors.hpp"
#include "capset/qnomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace capset {

std::array<BigInt, 3> recurrence_coefficients(long n) {
    const BigInt m = n;
    BigInt c0 = 243 * (3 * m + 5) * (3 * m + 2) * (11 * m + 20) * (3 * m + 4) * (1 + 3 * m) * (m + 1);
    BigInt c1 = -18 * (3 * m + 5) * (1 + 2 * m) * (3 * m + 4) * (759 * m * m * m + 2898 * m * m + 3505 * m + 1350);
    BigInt c2 = 16 * (5 + 4 * m) * (3 + 2 * m) * (1 + 2 * m) * (11 * m + 9) * (7 + 4 * m) * (m + 2);
    return {c0, c1, c2};
}

std::vector<BigInt> trinomial_diagonal(int n_max) {
    std::vector<BigInt> d;
    d.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) d.push_back(qnomial(3 * n, 2L * n, 3));
    return d;
}

RecurrenceCheck verify_recurrence(std::span<const BigInt> values) {
    RecurrenceCheck check;
    check.n_max = static_cast<int>(values.size()) - 1;
    if (check.n_max < 2) throw DomainError("verify_recurrence: need d(0..n_max) with n_max >= 2");
    for (int n = 0; n + 2 <= check.n_max; ++n) {
        const auto c = recurrence_coefficients(n);
        const auto i = static_cast<std::size_t>(n);
        if (c[0] * values[i] + c[1] * values[i + 1] + c[2] * values[i + 2] != 0) {
            check.first_failure = n;
            break;
        }
    }
    check.all_zero = !check.first_failure;
    return check;
}

RecurrenceCheck verify_recurrence(int n_max) {
    if (n_max < 2) throw DomainError("verify_recurrence: n_max must be at least 2");
    const auto d = trinomial_diagonal(n_max);
    return verify_recurrence(std::span<const BigInt>(d));
}

BigFixed characteristic_root(int digits) {
    if (digits < 1) throw DomainError("characteristic_root: digits must be positive");
    const int s = digits + kGuardDigits;
    const BigFixed root33 = sqrt(BigFixed::from_int(33, s));
    const BigFixed value = (BigFixed::from_int(5589, s) + BigFixed::from_int(891, s) * root33) / 512;
    return value.rescale(digits);
}

BigFixed alpha(int digits) {
    if (digits < 1) throw DomainError("alpha: digits must be positive");
    const int s = digits + kGuardDigits;
    return cbrt(characteristic_root(s)).rescale(digits);
}

namespace {

// g(x) = sum_j (3j - (q-1)) x^j and g'(x), by Horner.
std::pair<BigFixed, BigFixed> stationarity(int q, const BigFixed& x) {
    const int s = x.scale();
    BigFixed g = BigFixed::from_int(0, s);
    BigFixed dg = BigFixed::from_int(0, s);
    for (int j = q - 1; j >= 0; --j) {
        dg = dg * x + g;
        g = g * x + BigFixed::from_int(3 * j - (q - 1), s);
    }
    return {g, dg};
}

BigFixed geometric_sum(int q, const BigFixed& x) {
    BigFixed f = BigFixed::from_int(0, x.scale());
    for (int j = 0; j < q; ++j) f = f * x + BigFixed::from_int(1, x.scale());
    return f;
}

}  // namespace

SaddleResult saddle_point(int q, int digits) {
    if (q < 2) throw DomainError("saddle_point: q must be at least 2, got " + std::to_string(q));
    if (digits < 1) throw DomainError("saddle_point: digits must be positive");
    const int s = digits + kGuardDigits;

    // g(0) = -(q-1) < 0 and g(1) = q(q-1)/2 > 0, and g has a single sign change on (0,1).
    BigFixed lo = BigFixed::from_int(0, s);
    BigFixed hi = BigFixed::from_int(1, s);
    assert(stationarity(q, lo).first.sign() < 0 && stationarity(q, hi).first.sign() > 0);
    const BigFixed width = BigFixed(1, 8);
    while (hi - lo > width) {
        BigFixed mid = (lo + hi) / 2;
        if (stationarity(q, mid).first.sign() < 0) lo = mid;
        else hi = mid;
    }

    // Newton until the mantissa is stationary (or flips between two neighbours).
    BigFixed x = (lo + hi) / 2;
    BigFixed previous = x;
    for (int iter = 0; iter < 200; ++iter) {
        const auto [g, dg] = stationarity(q, x);
        BigFixed next = x - g / dg;
        if (next == x || next == previous) {
            x = std::min(next, x);
            break;
        }
        previous = x;
        x = std::move(next);
    }
    if (x.sign() <= 0 || x >= BigFixed::from_int(1, s))
        throw std::logic_error("saddle_point: Newton left (0,1) for q = " + std::to_string(q));

    SaddleResult r;
    r.q = q;
    r.residual = stationarity(q, x).first.abs();
    // x0^((q-1)/3) as the cube root of x0^(q-1)
    const BigFixed scale_power = cbrt(pow(x, static_cast<unsigned>(q - 1)));
    r.constant = (geometric_sum(q, x) / scale_power).rescale(digits);
    r.x0 = x.rescale(digits);
    return r;
}

BigFixed growth_constant(int q, int digits) {
    return saddle_point(q, digits).constant;
}

namespace {

BigInt ratio_coefficient(int q, int n) {
    return qnomial(n, static_cast<long>(q - 1) * n / 3, q);
}

BigFixed cube_root_ratio(int q, int n, int scale) {
    return cbrt(BigFixed::from_ratio(ratio_coefficient(q, n), ratio_coefficient(q, n - 3), scale));
}

}  // namespace

RatioEstimate growth_constant_ratio(int q, int n_max) {
    if (q < 2) throw DomainError("growth_constant_ratio: q must be at least 2");
    if (n_max % 3 != 0 || n_max < 30)
        throw DomainError("growth_constant_ratio: n_max must be a multiple of 3 and at least 30, got " +
                          std::to_string(n_max));
    const int scale = 30;
    RatioEstimate est;
    est.q = q;
    est.n_high = n_max;
    est.n_low = 3 * (n_max / 6);
    est.ratio_high = cube_root_ratio(q, est.n_high, scale);
    est.ratio_low = cube_root_ratio(q, est.n_low, scale);
    // r(n) ~ L + A/h with h = n - 3/2 the midpoint of [n-3, n]; eliminate A. Weights use 2h.
    const long h2 = 2L * est.n_high - 3;
    const long h1 = 2L * est.n_low - 3;
    est.extrapolated = (est.ratio_high * h2 - est.ratio_low * h1) / (h2 - h1);
    return est;
}

BigFixed leading_constant(int digits) {
    if (digits < 1) throw DomainError("leading_constant: digits must be positive");
    const int s = digits + kGuardDigits;
    const BigFixed x = saddle_point(3, s).x0;
    const BigFixed one = BigFixed::from_int(1, s);
    const BigFixed f = one + x + x * x;
    const BigFixed df = one + x * 2;
    const BigFixed d2f = BigFixed::from_int(2, s);
    // mu = x f'/f, mu' = (f' f + x f'' f - x f'^2) / f^2
    const BigFixed dmu = (df * f + x * d2f * f - x * df * df) / (f * f);
    const BigFixed variance = x * dmu;
    const BigFixed tail = BigFixed::from_int(3, s) / (one - x) - one;
    const BigFixed c = tail / sqrt(pi(s) * 2 * variance);
    return c.rescale(digits);
}

BigFixed normalized_sharp_bound(int n, int scale) {
    if (n <= 0 || n % 3 != 0) throw DomainError("normalized_sharp_bound: n must be a positive multiple of 3");
    const int s = scale + kGuardDigits;
    const BigFixed a = alpha(s + 10);
    const BigFixed growth = pow(a, static_cast<unsigned>(n));
    const BigFixed bound = BigFixed::from_int(sharp_bound(n).value, s);
    return (bound * sqrt(BigFixed::from_int(n, s)) / growth).rescale(scale);
}

ConstantExtrapolation extrapolate_leading_constant(std::span<const int> ns) {
    if (ns.empty()) throw DomainError("extrapolate_leading_constant: no sample points");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] != 2 * ns[i - 1]) throw DomainError("extrapolate_leading_constant: sample points must double");
    ConstantExtrapolation out;
    out.ns.assign(ns.begin(), ns.end());
    for (int n : ns) out.samples.push_back(normalized_sharp_bound(n));

    // Richardson table for an expansion in powers of 1/n with step ratio 2.
    std::vector<BigFixed> column = out.samples;
    for (long k = 1; column.size() > 1; ++k) {
        const long factor = 1L << k;
        std::vector<BigFixed> next;
        for (std::size_t i = 0; i + 1 < column.size(); ++i)
            next.push_back((column[i + 1] * factor - column[i]) / (factor - 1));
        column = std::move(next);
    }
    out.extrapolated = column.front();
    return out;
}

double first_correction_estimate(int n_max) {
    if (n_max % 6 != 0 || n_max < 600)
        throw DomainError("first_correction_estimate: n_max must be a multiple of 6 and at least 600, got " +
                          std::to_string(n_max));
    const BigFixed c = leading_constant(kDefaultDigits);
    const BigFixed one = BigFixed::from_int(1, kDefaultDigits);
    auto excess = [&](int n) { return (normalized_sharp_bound(n) / c - one) * n; };
    const BigFixed estimate = excess(n_max) * 2 - excess(n_max / 2);
    return estimate.to_double();
}

}  // namespace capset
