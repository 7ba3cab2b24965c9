#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace capset {

using BigInt = mpz_class;

/// Coefficient row of (1 + x + ... + x^(q-1))^n.
///
/// coeffs[k] is the number of tuples (a_1..a_n) with 0 <= a_i < q summing to k.
/// The row is symmetric, sums to q^n and has (q-1)n + 1 entries.
struct QNomialRow {
    int n = 0;
    int q = 2;
    std::vector<BigInt> coeffs;

    int degree() const { return (q - 1) * n; }

    /// Coefficient of x^k; zero outside [0, degree()].
    const BigInt& at(long k) const;
};

/// Exact row for (n, q). Rows are memoized per (n, q) for the life of the process;
/// the returned pointer is immutable and safe to share between threads.
std::shared_ptr<const QNomialRow> qnomial_row(int n, int q);

/// Coefficient of x^k in (1 + ... + x^(q-1))^n. Total in k: out-of-range gives 0.
BigInt qnomial(int n, long k, int q);

/// |M(n,d)|: number of monomials with exponents < q and total degree <= d.
BigInt mspace_size(int n, long d, int q);

/// Coefficient of z^((q-1)n/3) in (1 + ... + z^(q-1))^n * (2+z)/(1-z).
/// Requires (q-1)n divisible by 3.
BigInt series_coeff_bound(int n, int q);

/// q^n as a big integer.
BigInt ipow(int base, int exponent);

}  // namespace capset
