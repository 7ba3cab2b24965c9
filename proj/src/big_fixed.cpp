#include "capset/big_fixed.hpp"

#include "capset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace capset {

BigInt pow10(int k) {
    if (k < 0) throw DomainError("pow10: negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    if (n < 2) return n;
    // Start above the root; Newton then decreases monotonically to floor(sqrt(n)).
    BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2);
    while (true) {
        BigInt next = (x + n / x) >> 1;
        if (next >= x) return x;
        x = std::move(next);
    }
}

BigInt icbrt(const BigInt& n) {
    if (n < 0) return -icbrt(-n);
    if (n < 2) return n;
    BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(n.get_mpz_t(), 2) + 2) / 3);
    while (true) {
        BigInt next = (2 * x + n / (x * x)) / 3;
        if (next >= x) return x;
        x = std::move(next);
    }
}

namespace {

// Rounded num / den, ties away from zero.
BigInt div_round(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt twice = 2 * abs(r);
    if (twice >= abs(den)) q += (sgn(num) * sgn(den) >= 0) ? 1 : -1;
    return q;
}

}  // namespace

BigFixed::BigFixed(BigInt mantissa, int scale) : mantissa_(std::move(mantissa)), scale_(scale) {
    if (scale < 0) throw DomainError("BigFixed: negative scale");
}

BigFixed BigFixed::from_int(const BigInt& v, int scale) {
    return BigFixed(v * pow10(scale), scale);
}

BigFixed BigFixed::from_ratio(const BigInt& num, const BigInt& den, int scale) {
    if (den == 0) throw DomainError("BigFixed: division by zero");
    return BigFixed(div_round(num * pow10(scale), den), scale);
}

BigFixed BigFixed::parse(std::string_view text) {
    std::string digits;
    int scale = 0;
    bool seen_point = false;
    bool negative = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (i == 0 && (c == '-' || c == '+')) {
            negative = c == '-';
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) ++scale;
        } else {
            throw DomainError("BigFixed: cannot parse '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw DomainError("BigFixed: cannot parse '" + std::string(text) + "'");
    BigInt m(digits, 10);
    return BigFixed(negative ? BigInt(-m) : m, scale);
}

BigFixed BigFixed::rescale(int scale) const {
    if (scale == scale_) return *this;
    if (scale > scale_) return BigFixed(mantissa_ * pow10(scale - scale_), scale);
    return BigFixed(div_round(mantissa_, pow10(scale_ - scale)), scale);
}

BigFixed BigFixed::abs() const {
    return BigFixed(::abs(mantissa_), scale_);
}

BigFixed operator+(const BigFixed& a, const BigFixed& b) {
    const int s = std::max(a.scale_, b.scale_);
    return BigFixed(a.rescale(s).mantissa_ + b.rescale(s).mantissa_, s);
}

BigFixed operator-(const BigFixed& a, const BigFixed& b) {
    const int s = std::max(a.scale_, b.scale_);
    return BigFixed(a.rescale(s).mantissa_ - b.rescale(s).mantissa_, s);
}

BigFixed operator*(const BigFixed& a, const BigFixed& b) {
    const int s = std::max(a.scale_, b.scale_);
    // a.m * b.m has scale a.s + b.s
    return BigFixed(div_round(a.mantissa_ * b.mantissa_, pow10(a.scale_ + b.scale_ - s)), s);
}

BigFixed operator/(const BigFixed& a, const BigFixed& b) {
    if (b.mantissa_ == 0) throw DomainError("BigFixed: division by zero");
    const int s = std::max(a.scale_, b.scale_);
    // (a.m 10^-as) / (b.m 10^-bs) * 10^s
    return BigFixed(div_round(a.mantissa_ * pow10(s - a.scale_ + b.scale_), b.mantissa_), s);
}

BigFixed operator/(const BigFixed& a, long k) {
    if (k == 0) throw DomainError("BigFixed: division by zero");
    return BigFixed(div_round(a.mantissa_, BigInt(k)), a.scale_);
}

std::strong_ordering operator<=>(const BigFixed& a, const BigFixed& b) {
    const int s = std::max(a.scale_, b.scale_);
    const int c = cmp(a.rescale(s).mantissa_, b.rescale(s).mantissa_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string BigFixed::to_string() const {
    std::string digits = BigInt(::abs(mantissa_)).get_str();
    if (digits.size() <= static_cast<std::size_t>(scale_))
        digits.insert(0, static_cast<std::size_t>(scale_) + 1 - digits.size(), '0');
    std::string out = mantissa_ < 0 ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(scale_));
    if (scale_ > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(scale_));
    return out;
}

double BigFixed::to_double() const {
    return std::stod(to_string());
}

BigFixed sqrt(const BigFixed& x) {
    if (x.sign() < 0) throw DomainError("sqrt: negative argument");
    return BigFixed(isqrt(x.mantissa() * pow10(x.scale())), x.scale());
}

BigFixed cbrt(const BigFixed& x) {
    return BigFixed(icbrt(x.mantissa() * pow10(2 * x.scale())), x.scale());
}

BigFixed pow(const BigFixed& x, unsigned exponent) {
    BigFixed result = BigFixed::from_int(1, x.scale());
    BigFixed base = x;
    for (unsigned e = exponent; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

namespace {

// arctan(1/k) * 10^scale by the alternating series, in exact integers.
BigInt arctan_inverse(long k, int scale) {
    const BigInt unit = pow10(scale);
    const BigInt k2 = BigInt(k) * k;
    BigInt power = unit / k;  // 10^s / k^(2j+1)
    BigInt sum = power;
    for (long j = 1; power != 0; ++j) {
        power /= k2;
        BigInt term = power / (2 * j + 1);
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

}  // namespace

BigFixed pi(int scale) {
    const int guard = 10;
    // pi = 16 arctan(1/5) - 4 arctan(1/239)
    BigInt value = 16 * arctan_inverse(5, scale + guard) - 4 * arctan_inverse(239, scale + guard);
    return BigFixed(value, scale + guard).rescale(scale);
}

}  // namespace capset
