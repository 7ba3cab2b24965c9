#include "capset/field_poly.hpp"

#include "capset/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace capset {

int Monomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    const std::size_t common = std::min(exponents_.size(), other.exponents_.size());
    for (std::size_t i = 0; i < common; ++i)
        if (exponents_[i] != other.exponents_[i]) return exponents_[i] <=> other.exponents_[i];
    return exponents_.size() <=> other.exponents_.size();
}

Monomial Monomial::slice(int first, int count) const {
    auto begin = exponents_.begin() + first;
    return Monomial(std::vector<std::uint8_t>(begin, begin + count));
}

Monomial Monomial::concat(const Monomial& other) const {
    std::vector<std::uint8_t> e = exponents_;
    e.insert(e.end(), other.exponents_.begin(), other.exponents_.end());
    return Monomial(std::move(e));
}

std::vector<Monomial> monomials_up_to(int nvars, int p, int max_degree) {
    std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(std::max(max_degree, -1) + 1));
    if (max_degree < 0) return {};
    std::vector<std::uint8_t> e(static_cast<std::size_t>(nvars), 0);
    // Odometer over [0, p)^n, lexicographic with the first variable most significant.
    while (true) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (deg <= max_degree) by_degree[static_cast<std::size_t>(deg)].emplace_back(e);
        int i = nvars - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == p - 1) e[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++e[static_cast<std::size_t>(i)];
    }
    std::vector<Monomial> out;
    for (auto& group : by_degree)
        for (auto& m : group) out.push_back(std::move(m));
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

FieldPoly::FieldPoly(int p, int nvars) : p_(p), nvars_(nvars) {
    if (!is_prime(p) || p > 251) throw DomainError("FieldPoly: modulus must be a prime below 256, got " + std::to_string(p));
    if (nvars < 0) throw DomainError("FieldPoly: negative variable count");
}

FieldPoly FieldPoly::constant(int p, int nvars, long c) {
    FieldPoly f(p, nvars);
    f.add_term(Monomial::one(nvars), c);
    return f;
}

FieldPoly FieldPoly::variable(int p, int nvars, int index) {
    Monomial m = Monomial::one(nvars);
    m[static_cast<std::size_t>(index)] = 1;
    return monomial(p, m);
}

FieldPoly FieldPoly::monomial(int p, const Monomial& m, long c) {
    FieldPoly f(p, m.nvars());
    f.add_term(m, c);
    return f;
}

int FieldPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

FieldPoly::Coeff FieldPoly::reduce(long c) const {
    long r = c % p_;
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
}

void FieldPoly::add_term(const Monomial& m, long c) {
    if (m.nvars() != nvars_) throw DomainError("FieldPoly: monomial arity mismatch");
    Coeff r = reduce(c);
    if (r == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, r);
    if (!inserted) {
        it->second = (it->second + r) % static_cast<Coeff>(p_);
        if (it->second == 0) terms_.erase(it);
    }
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& o) {
    if (o.p_ != p_ || o.nvars_ != nvars_) throw DomainError("FieldPoly: incompatible operands");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& o) {
    if (o.p_ != p_ || o.nvars_ != nvars_) throw DomainError("FieldPoly: incompatible operands");
    for (const auto& [m, c] : o.terms_) add_term(m, -static_cast<long>(c));
    return *this;
}

FieldPoly& FieldPoly::operator*=(long c) {
    Coeff r = reduce(c);
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v = static_cast<Coeff>((static_cast<long>(v) * r) % p_);
    return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    if (a.p_ != b.p_ || a.nvars_ != b.nvars_) throw DomainError("FieldPoly: incompatible operands");
    FieldPoly out(a.p_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < static_cast<std::size_t>(a.nvars_); ++i) {
                int e = m[i] + mb[i];
                // x^p = x on F_p
                if (e >= a.p_) e -= a.p_ - 1;
                m[i] = static_cast<std::uint8_t>(e);
            }
            out.add_term(m, static_cast<long>(ca) * cb);
        }
    }
    return out;
}

FieldPoly FieldPoly::extend_right(int extra) const {
    FieldPoly out(p_, nvars_ + extra);
    const Monomial pad = Monomial::one(extra);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.concat(pad), c);
    return out;
}

FieldPoly FieldPoly::extend_left(int extra) const {
    FieldPoly out(p_, nvars_ + extra);
    const Monomial pad = Monomial::one(extra);
    for (const auto& [m, c] : terms_) out.terms_.emplace(pad.concat(m), c);
    return out;
}

std::uint32_t eval_poly(const FieldPoly& poly, std::span<const std::uint8_t> point) {
    if (static_cast<int>(point.size()) != poly.nvars())
        throw DomainError("eval_poly: point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                          std::to_string(poly.nvars()) + " variables");
    const std::uint64_t p = static_cast<std::uint64_t>(poly.p());
    std::uint64_t total = 0;
    for (const auto& [m, c] : poly.terms()) {
        std::uint64_t v = c;
        for (std::size_t i = 0; i < point.size() && v != 0; ++i)
            for (int k = 0; k < m[i]; ++k) v = (v * point[i]) % p;
        total = (total + v) % p;
    }
    return static_cast<std::uint32_t>(total);
}

long support_size(const FieldPoly& poly) {
    const int n = poly.nvars();
    std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
    long count = 0;
    while (true) {
        if (eval_poly(poly, x) != 0) ++count;
        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == poly.p() - 1) x[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return count;
}

FieldPoly expand_neg_sum(const FieldPoly& poly) {
    const int p = poly.p();
    const int n = poly.nvars();
    // binom[e][j] mod p for e < p
    std::vector<std::vector<long>> binom(static_cast<std::size_t>(p));
    for (int e = 0; e < p; ++e) {
        auto& row = binom[static_cast<std::size_t>(e)];
        row.assign(static_cast<std::size_t>(e + 1), 1);
        for (int j = 1; j < e; ++j)
            row[static_cast<std::size_t>(j)] =
                (binom[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(j - 1)] +
                 binom[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(j)]) % p;
    }

    FieldPoly out(p, 2 * n);
    std::vector<std::uint8_t> split(static_cast<std::size_t>(n));
    for (const auto& [m, c] : poly.terms()) {
        // (-b_i - c_i)^e = (-1)^e sum_j C(e,j) b_i^j c_i^(e-j); odometer over every j_i in [0, e_i].
        std::fill(split.begin(), split.end(), 0);
        const long sign = (m.degree() % 2 == 0) ? 1 : -1;
        while (true) {
            long coeff = sign * static_cast<long>(c);
            std::vector<std::uint8_t> e(static_cast<std::size_t>(2 * n));
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                coeff = (coeff * binom[m[i]][split[i]]) % p;
                e[i] = split[i];
                e[i + static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(m[i] - split[i]);
            }
            out.add_term(Monomial(std::move(e)), coeff);
            int i = n - 1;
            while (i >= 0 && split[static_cast<std::size_t>(i)] == m[static_cast<std::size_t>(i)])
                split[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++split[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

ClpSplit clp_split(const FieldPoly& q_poly, long d) {
    if (q_poly.nvars() % 2 != 0) throw DomainError("clp_split: expected 2n variables (b then c)");
    if (q_poly.degree() > d)
        throw PreconditionError("clp_split: total degree " + std::to_string(q_poly.degree()) + " exceeds d = " +
                                std::to_string(d));
    const int n = q_poly.nvars() / 2;
    const int p = q_poly.p();
    ClpSplit out;
    out.half_degree = static_cast<int>(d / 2);
    for (const auto& [m, c] : q_poly.terms()) {
        Monomial beta = m.slice(0, n);
        Monomial gamma = m.slice(n, n);
        // deg beta + deg gamma <= d, so deg beta > floor(d/2) forces deg gamma <= floor(d/2).
        if (beta.degree() <= out.half_degree) {
            auto it = out.b_side.try_emplace(beta, p, n).first;
            it->second.add_term(gamma, c);
        } else {
            auto it = out.c_side.try_emplace(gamma, p, n).first;
            it->second.add_term(beta, c);
        }
    }
    return out;
}

FieldPoly clp_reconstruct(const ClpSplit& split, int p, int n) {
    FieldPoly total(p, 2 * n);
    for (const auto& [m, f] : split.b_side)
        total += FieldPoly::monomial(p, m).extend_right(n) * f.extend_left(n);
    for (const auto& [m, g] : split.c_side)
        total += FieldPoly::monomial(p, m).extend_left(n) * g.extend_right(n);
    return total;
}

}  // namespace capset
