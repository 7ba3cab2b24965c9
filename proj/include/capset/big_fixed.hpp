#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace capset {

using BigInt = mpz_class;

/// floor(sqrt(n)) for n >= 0 by integer Newton iteration.
BigInt isqrt(const BigInt& n);
/// floor(cbrt(n)) for n >= 0, rounded toward zero for n < 0, by integer Newton iteration.
BigInt icbrt(const BigInt& n);
/// 10^k.
BigInt pow10(int k);

/// Decimal fixed-point real: value = mantissa * 10^-scale.
///
/// Binary operations run at the larger of the two scales. Products and quotients are rounded
/// to nearest (ties away from zero); roots are floored.
class BigFixed {
public:
    BigFixed() = default;
    BigFixed(BigInt mantissa, int scale);

    static BigFixed from_int(const BigInt& v, int scale);
    static BigFixed from_ratio(const BigInt& num, const BigInt& den, int scale);
    /// Parses "[-]digits[.digits]"; the scale is the number of fractional digits.
    static BigFixed parse(std::string_view text);

    const BigInt& mantissa() const { return mantissa_; }
    int scale() const { return scale_; }

    /// Same value at another scale (rounded to nearest when dropping digits).
    BigFixed rescale(int scale) const;
    BigFixed abs() const;
    int sign() const { return sgn(mantissa_); }

    friend BigFixed operator+(const BigFixed& a, const BigFixed& b);
    friend BigFixed operator-(const BigFixed& a, const BigFixed& b);
    friend BigFixed operator*(const BigFixed& a, const BigFixed& b);
    friend BigFixed operator/(const BigFixed& a, const BigFixed& b);
    BigFixed operator-() const { return BigFixed(-mantissa_, scale_); }
    friend BigFixed operator*(const BigFixed& a, long k) { return BigFixed(a.mantissa_ * k, a.scale_); }
    friend BigFixed operator/(const BigFixed& a, long k);

    friend std::strong_ordering operator<=>(const BigFixed& a, const BigFixed& b);
    friend bool operator==(const BigFixed& a, const BigFixed& b) { return (a <=> b) == 0; }

    /// Decimal expansion with exactly scale() fractional digits.
    std::string to_string() const;
    double to_double() const;

private:
    BigInt mantissa_ = 0;
    int scale_ = 0;
};

BigFixed sqrt(const BigFixed& x);
BigFixed cbrt(const BigFixed& x);
BigFixed pow(const BigFixed& x, unsigned exponent);
/// pi to the given scale (Machin's formula).
BigFixed pi(int scale);

}  // namespace capset
