#include "capset/clp_verifier.hpp"

#include "capset/capsearch.hpp"
#include "capset/errors.hpp"

#include <algorithm>
#include <string>

namespace capset {

std::vector<FieldPoly> vanishing_space_basis(int n, int d, const PointSet& zeros, int p) {
    if (zeros.p() != p || zeros.n() != n) throw DomainError("vanishing_space_basis: point set is not in F_p^n");
    if (d < 0 || d > (p - 1) * n)
        throw DomainError("vanishing_space_basis: degree " + std::to_string(d) + " outside [0, (p-1)n]");

    const auto monomials = monomials_up_to(n, p, d);
    ModMatrix eval(p, zeros.size(), monomials.size());
    for (std::size_t r = 0; r < zeros.size(); ++r) {
        const auto x = zeros.point(r);
        for (std::size_t c = 0; c < monomials.size(); ++c)
            eval(r, c) = eval_poly(FieldPoly::monomial(p, monomials[c]), x);
    }

    std::vector<FieldPoly> basis;
    for (const auto& v : nullspace_mod_p(eval)) {
        FieldPoly poly(p, n);
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) poly.add_term(monomials[c], v[c]);
        basis.push_back(std::move(poly));
    }
    return basis;
}

ModMatrix product_matrix(const FieldPoly& poly, const PointSet& set) {
    if (set.p() != poly.p() || set.n() != poly.nvars()) throw DomainError("product_matrix: dimension mismatch");
    const int p = set.p();
    ModMatrix m(p, set.size(), set.size());
    std::vector<std::uint8_t> sum(static_cast<std::size_t>(set.n()));
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto a = set.point(i);
        for (std::size_t j = 0; j < set.size(); ++j) {
            const auto b = set.point(j);
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] = static_cast<std::uint8_t>((2 * p - a[k] - b[k]) % p);
            m(i, j) = eval_poly(poly, sum);
        }
    }
    return m;
}

namespace {

// Combination of the basis that is nonzero on every pivot point of its value table on A:
// row-reduce the table, then sum the reduced rows. Returns the polynomial.
FieldPoly spread_member(const std::vector<FieldPoly>& basis, const PointSet& set, int p, int n) {
    const std::size_t k = basis.size();
    // [values on A | identity] so the row operations are recorded as basis coefficients.
    ModMatrix table(p, k, set.size() + k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < set.size(); ++c) table(r, c) = eval_poly(basis[r], set.point(c));
        table(r, set.size() + r) = 1;
    }
    row_reduce(table);
    FieldPoly member(p, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t b = 0; b < k; ++b)
            if (auto c = table(r, set.size() + b); c != 0) member += basis[b] * static_cast<long>(c);
    return member;
}

}  // namespace

VerifierReport verify_support_bound(int n, int d, const PointSet& set, int p) {
    if (p != 3) throw UnsupportedError("verify_support_bound: the rank argument is checked over F_3 only");
    if (set.p() != 3 || set.n() != n) throw DomainError("verify_support_bound: set is not a subset of F_3^n");
    if (!is_progression_free(set)) throw PreconditionError("verify_support_bound: A contains a + b + c = 0 with a, b, c distinct");

    VerifierReport report;
    report.n = n;
    report.d = d;
    report.set_size = static_cast<long>(set.size());
    report.monomial_count = static_cast<long>(monomials_up_to(n, 3, d).size());
    report.support_cap = 2 * static_cast<long>(monomials_up_to(n, 3, d / 2).size());

    const PointSet complement = set.complement();
    const auto basis = vanishing_space_basis(n, d, complement, 3);
    report.dim_v = static_cast<long>(basis.size());
    report.dim_lower_bound = report.monomial_count - static_cast<long>(complement.size());

    report.diagonal_ok = true;
    report.rank_ok = true;
    report.support_ok = true;
    for (const auto& poly : basis) {
        const ModMatrix m = product_matrix(poly, set);
        // Off-diagonal entries are P(-b-c) with -b-c outside A, where P vanishes.
        report.diagonal_ok = report.diagonal_ok && m.is_diagonal();
        const int rank = rank_mod_p(m);
        report.rank = std::max(report.rank, rank);
        report.rank_ok = report.rank_ok && rank <= report.support_cap;
        const long support = support_size(poly);
        report.max_support = std::max(report.max_support, support);
        report.support_ok = report.support_ok && support <= report.support_cap;
    }
    if (!basis.empty()) {
        report.spread_support = support_size(spread_member(basis, set, 3, n));
        report.support_ok = report.support_ok && report.spread_support >= report.dim_v &&
                            report.spread_support <= report.support_cap;
    }

    const long space = static_cast<long>(complement.size() + set.size());
    report.bound_ok = report.dim_v >= report.dim_lower_bound &&
                      report.set_size <= report.support_cap + space - report.monomial_count;
    return report;
}

}  // namespace capset
