#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace capset {

/// Exponent vector x_1^e_1 ... x_n^e_n. Exponents are kept below the field size.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint8_t> exponents) : exponents_(std::move(exponents)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<std::uint8_t>(static_cast<std::size_t>(nvars), 0)); }

    int nvars() const { return static_cast<int>(exponents_.size()); }
    int degree() const;
    std::uint8_t operator[](std::size_t i) const { return exponents_[i]; }
    std::uint8_t& operator[](std::size_t i) { return exponents_[i]; }
    std::span<const std::uint8_t> exponents() const { return exponents_; }

    /// Exponents [first, first + count) as a monomial in count variables.
    Monomial slice(int first, int count) const;
    /// This monomial followed by other (disjoint variable sets).
    Monomial concat(const Monomial& other) const;

    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::uint8_t> exponents_;
};

/// All monomials in nvars variables with exponents < p and total degree <= max_degree,
/// ordered by degree, then lexicographically.
std::vector<Monomial> monomials_up_to(int nvars, int p, int max_degree);

/// Multivariate polynomial over the prime field F_p, read as a function on F_p^n.
/// Exponents stay below p (x^p is reduced to x), zero coefficients are never stored.
class FieldPoly {
public:
    using Coeff = std::uint32_t;
    using Terms = std::map<Monomial, Coeff>;

    FieldPoly(int p, int nvars);

    static FieldPoly constant(int p, int nvars, long c);
    static FieldPoly variable(int p, int nvars, int index);
    static FieldPoly monomial(int p, const Monomial& m, long c = 1);

    int p() const { return p_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    /// Adds c * m, reducing c mod p (c may be negative).
    void add_term(const Monomial& m, long c);

    FieldPoly& operator+=(const FieldPoly& o);
    FieldPoly& operator-=(const FieldPoly& o);
    FieldPoly& operator*=(long c);
    friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
    friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
    friend FieldPoly operator*(FieldPoly a, long c) { return a *= c; }
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
    bool operator==(const FieldPoly& o) const { return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Polynomial in nvars + extra variables; the new variables come last.
    FieldPoly extend_right(int extra) const;
    /// Polynomial in extra + nvars variables; the new variables come first.
    FieldPoly extend_left(int extra) const;

private:
    Coeff reduce(long c) const;

    int p_;
    int nvars_;
    Terms terms_;
};

bool is_prime(int p);

/// P(x) in F_p. Exponents are applied literally since they are already < p.
std::uint32_t eval_poly(const FieldPoly& poly, std::span<const std::uint8_t> point);

/// Number of points of F_p^n where the polynomial function is nonzero.
long support_size(const FieldPoly& poly);

/// Substitutes x_i <- -b_i - c_i. The result has 2n variables (b_1..b_n, c_1..c_n).
FieldPoly expand_neg_sum(const FieldPoly& poly);

/// Q(b, c) = sum_m m(b) F_m(c) + sum_m m(c) G_m(b), every key m of degree <= floor(d/2).
struct ClpSplit {
    int half_degree = 0;
    std::map<Monomial, FieldPoly> b_side;  ///< m(b) -> F_m(c)
    std::map<Monomial, FieldPoly> c_side;  ///< m(c) -> G_m(b)
};

/// Routes each monomial b^beta c^gamma of Q: deg beta <= floor(d/2) goes to F_{b^beta},
/// otherwise deg gamma <= floor(d/2) is forced and it goes to G_{c^gamma}.
/// Q must have an even number of variables and total degree <= d.
ClpSplit clp_split(const FieldPoly& q_poly, long d);

/// Reassembles sum_m m(b) F_m(c) + sum_m m(c) G_m(b) in 2n variables.
FieldPoly clp_reconstruct(const ClpSplit& split, int p, int n);

}  // namespace capset
