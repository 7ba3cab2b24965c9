#include "capset/errors.hpp"
#include "capset/field_poly.hpp"
#include "capset/matrix_mod_p.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace capset;

namespace {

FieldPoly poly1(std::initializer_list<std::pair<int, long>> terms, int p = 3) {
    FieldPoly f(p, 1);
    for (auto [e, c] : terms) f.add_term(Monomial({static_cast<std::uint8_t>(e)}), c);
    return f;
}

// Polynomial in (b, c) for n = 1: terms given as (deg b, deg c, coeff).
FieldPoly poly_bc(std::initializer_list<std::array<int, 3>> terms) {
    FieldPoly f(3, 2);
    for (auto t : terms) f.add_term(Monomial({static_cast<std::uint8_t>(t[0]), static_cast<std::uint8_t>(t[1])}), t[2]);
    return f;
}

FieldPoly random_poly(std::mt19937_64& rng, int p, int n, int d) {
    FieldPoly f(p, n);
    std::uniform_int_distribution<int> coeff(0, p - 1);
    for (const auto& m : monomials_up_to(n, p, d))
        if (rng() % 2) f.add_term(m, coeff(rng));
    return f;
}

// Determinant mod p by cofactor expansion along the first row.
long det_mod(const std::vector<std::vector<long>>& a, int p) {
    const std::size_t n = a.size();
    if (n == 1) return ((a[0][0] % p) + p) % p;
    long total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        const long term = a[0][j] * det_mod(minor, p) % p;
        total = (total + (j % 2 ? p - term : term)) % p;
    }
    return total;
}

ModMatrix to_matrix(const std::vector<std::vector<long>>& a, int p) {
    ModMatrix m(p, a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = static_cast<std::uint32_t>(a[i][j] % p);
    return m;
}

}  // namespace

TEST_SUITE("field_poly") {

TEST_CASE("monomial enumeration") {
    const auto ms = monomials_up_to(2, 3, 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms[0] == Monomial({0, 0}));
    CHECK(ms[1] == Monomial({0, 1}));
    CHECK(ms[2] == Monomial({1, 0}));
    CHECK(ms[3] == Monomial({0, 2}));
    CHECK(ms[4] == Monomial({1, 1}));
    CHECK(ms[5] == Monomial({2, 0}));
    CHECK(monomials_up_to(3, 3, 6).size() == 27);
    CHECK(monomials_up_to(2, 3, -1).empty());
}

TEST_CASE("evaluation") {
    const std::uint8_t two[] = {2};
    CHECK(eval_poly(poly1({{0, 1}, {1, 1}}), two) == 0);
    CHECK(eval_poly(poly1({{2, 1}}), two) == 1);
    CHECK(eval_poly(FieldPoly(3, 1), two) == 0);
    const std::uint8_t pair[] = {1, 2};
    CHECK_THROWS_AS(eval_poly(poly1({{1, 1}}), pair), DomainError);
}

TEST_CASE("coefficients reduce and zeros are dropped") {
    FieldPoly f = poly1({{1, 4}});
    CHECK(f.terms().at(Monomial({1})) == 1);
    f.add_term(Monomial({1}), 2);
    CHECK(f.is_zero());
    CHECK(f.degree() == -1);
    CHECK(poly1({{1, -1}}).terms().at(Monomial({1})) == 2);
}

TEST_CASE("products reduce x^p to x") {
    const FieldPoly x = FieldPoly::variable(3, 1, 0);
    CHECK(x * x * x == x);
    const FieldPoly y = FieldPoly::variable(5, 1, 0);
    CHECK(y * y * y * y * y == y);
    CHECK((x * x).degree() == 2);
}

TEST_CASE("field must be prime") {
    CHECK_THROWS_AS(FieldPoly(4, 1), DomainError);
    CHECK_THROWS_AS(FieldPoly(1, 1), DomainError);
    CHECK_NOTHROW(FieldPoly(7, 2));
}

TEST_CASE("expand the negated sum") {
    CHECK(expand_neg_sum(poly1({{1, 1}})) == poly_bc({{1, 0, 2}, {0, 1, 2}}));
    CHECK(expand_neg_sum(poly1({{2, 1}})) == poly_bc({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
    CHECK(expand_neg_sum(poly1({{0, 1}})) == poly_bc({{0, 0, 1}}));
}

TEST_CASE("split example") {
    const FieldPoly q = poly_bc({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}});
    const ClpSplit s = clp_split(q, 2);
    CHECK(s.half_degree == 1);
    REQUIRE(s.b_side.size() == 2);
    REQUIRE(s.c_side.size() == 1);
    CHECK(s.b_side.at(Monomial({0})) == poly1({{2, 1}}));
    CHECK(s.b_side.at(Monomial({1})) == poly1({{1, 2}}));
    CHECK(s.c_side.at(Monomial({0})) == poly1({{2, 1}}));
    CHECK(clp_reconstruct(s, 3, 1) == q);
}

TEST_CASE("split of zero and degree precondition") {
    const ClpSplit s = clp_split(FieldPoly(3, 4), 3);
    CHECK(s.b_side.empty());
    CHECK(s.c_side.empty());
    CHECK_THROWS_AS(clp_split(poly_bc({{2, 1, 1}}), 2), PreconditionError);
}

TEST_CASE("property: reconstruction and key degrees, (n,d,p) = (3,4,3)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const FieldPoly q = expand_neg_sum(random_poly(rng, 3, 3, 4));
        CHECK(q.degree() <= 4);
        const ClpSplit s = clp_split(q, 4);
        for (const auto& [m, f] : s.b_side) CHECK(m.degree() <= 2);
        for (const auto& [m, g] : s.c_side) CHECK(m.degree() <= 2);
        CHECK(clp_reconstruct(s, 3, 3) == q);
    }
}

TEST_CASE("property: reconstruction over other primes") {
    std::mt19937_64 rng(12);
    for (int p : {2, 5, 7}) {
        for (int trial = 0; trial < 10; ++trial) {
            const int d = static_cast<int>(rng() % 5);
            const FieldPoly q = expand_neg_sum(random_poly(rng, p, 2, d));
            CHECK(clp_reconstruct(clp_split(q, d), p, 2) == q);
        }
    }
}

TEST_CASE("property: eval of the expansion equals eval at -b-c") {
    std::mt19937_64 rng(13);
    for (int p : {3, 5}) {
        std::uniform_int_distribution<int> digit(0, p - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 3);
            const FieldPoly f = random_poly(rng, p, n, (p - 1) * n);
            const FieldPoly g = expand_neg_sum(f);
            std::vector<std::uint8_t> bc(static_cast<std::size_t>(2 * n)), x(static_cast<std::size_t>(n));
            for (auto& v : bc) v = static_cast<std::uint8_t>(digit(rng));
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                    (2 * p - bc[static_cast<std::size_t>(i)] - bc[static_cast<std::size_t>(i + n)]) % p);
            CHECK(eval_poly(g, bc) == eval_poly(f, x));
        }
    }
}

TEST_CASE("support size") {
    CHECK(support_size(poly1({{0, 1}, {1, 1}})) == 2);
    CHECK(support_size(FieldPoly(3, 2)) == 0);
    CHECK(support_size(FieldPoly::constant(3, 2, 1)) == 9);
    // 1 - x^2 is the indicator of the origin
    CHECK(support_size(poly1({{0, 1}, {2, -1}})) == 1);
}

}  // TEST_SUITE

TEST_SUITE("matrix_mod_p") {

TEST_CASE("rank examples") {
    CHECK(rank_mod_p(to_matrix({{1, 0}, {0, 1}}, 3)) == 2);
    CHECK(rank_mod_p(to_matrix({{1, 2}, {2, 1}}, 3)) == 1);
    CHECK(rank_mod_p(to_matrix({{0, 0}, {0, 0}}, 3)) == 0);
    CHECK(rank_mod_p(ModMatrix(3, 0, 4)) == 0);
}

TEST_CASE("inverses") {
    for (int p : {2, 3, 5, 7, 251})
        for (std::uint32_t a = 1; a < static_cast<std::uint32_t>(p); ++a)
            CHECK((a * inverse_mod(a, p)) % static_cast<std::uint32_t>(p) == 1);
}

TEST_CASE("property: outer products have rank one") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int p = trial % 2 ? 3 : 5;
        std::vector<long> u(4), v(5);
        for (auto& x : u) x = static_cast<long>(rng() % static_cast<unsigned>(p));
        for (auto& x : v) x = static_cast<long>(rng() % static_cast<unsigned>(p));
        u[rng() % 4] = 1;
        v[rng() % 5] = 1;
        std::vector<std::vector<long>> a(4, std::vector<long>(5));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) a[i][j] = u[i] * v[j];
        CHECK(rank_mod_p(to_matrix(a, p)) == 1);
    }
}

TEST_CASE("property: full rank iff nonzero determinant") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const int p = trial % 3 == 0 ? 2 : 3;
        const std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<long>> a(n, std::vector<long>(n));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<long>(rng() % static_cast<unsigned>(p));
        const bool full = rank_mod_p(to_matrix(a, p)) == static_cast<int>(n);
        CHECK(full == (det_mod(a, p) != 0));
    }
}

TEST_CASE("property: null space vectors are killed and count is cols - rank") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        ModMatrix m(3, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<std::uint32_t>(rng() % 3);
        const auto basis = nullspace_mod_p(m);
        CHECK(basis.size() == cols - static_cast<std::size_t>(rank_mod_p(m)));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < rows; ++i) {
                std::uint32_t s = 0;
                for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
                CHECK(s % 3 == 0);
            }
        }
    }
}

TEST_CASE("row reduction yields reduced echelon form") {
    ModMatrix m = to_matrix({{2, 1, 0}, {1, 2, 1}, {0, 0, 2}}, 3);
    const auto pivots = row_reduce(m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 2);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 2) == 1);
    CHECK(m(1, 0) == 0);
    CHECK(m(0, 2) == 0);
    CHECK(m(2, 0) == 0);
    CHECK(m(2, 1) == 0);
    CHECK(m(2, 2) == 0);
}

TEST_CASE("diagonal detection") {
    CHECK(to_matrix({{1, 0}, {0, 2}}, 3).is_diagonal());
    CHECK_FALSE(to_matrix({{1, 1}, {0, 2}}, 3).is_diagonal());
}

}  // TEST_SUITE
