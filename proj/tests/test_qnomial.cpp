#include "capset/errors.hpp"
#include "capset/qnomial.hpp"

#include "doctest.h"

#include <random>
#include <vector>

using namespace capset;

namespace {

// Oracle: count tuples in [0,q)^n by digit sum, straight enumeration.
std::vector<long> tuple_counts(int n, int q) {
    std::vector<long> counts(static_cast<std::size_t>((q - 1) * n + 1), 0);
    long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (long t = 0; t < total; ++t) {
        long rest = t, sum = 0;
        for (int i = 0; i < n; ++i) {
            sum += rest % q;
            rest /= q;
        }
        ++counts[static_cast<std::size_t>(sum)];
    }
    return counts;
}

std::vector<BigInt> row_of(int n, int q) { return qnomial_row(n, q)->coeffs; }

}  // namespace

TEST_SUITE("qnomial") {

TEST_CASE("rows from the examples") {
    CHECK(row_of(0, 3) == std::vector<BigInt>{1});
    CHECK(row_of(2, 3) == std::vector<BigInt>{1, 2, 3, 2, 1});
    CHECK(row_of(3, 3) == std::vector<BigInt>{1, 3, 6, 7, 6, 3, 1});
    CHECK(row_of(2, 2) == std::vector<BigInt>{1, 2, 1});
}

TEST_CASE("rows agree with tuple enumeration") {
    for (int q = 2; q <= 5; ++q) {
        for (int n = 0; n <= 7; ++n) {
            const auto oracle = tuple_counts(n, q);
            const auto row = qnomial_row(n, q);
            REQUIRE(row->coeffs.size() == oracle.size());
            for (std::size_t k = 0; k < oracle.size(); ++k) CHECK(row->coeffs[k] == oracle[k]);
        }
    }
}

TEST_CASE("single coefficients") {
    CHECK(qnomial(3, 2, 3) == 6);
    CHECK(qnomial(6, 4, 3) == 90);
    CHECK(qnomial(5, -1, 3) == 0);
    CHECK(qnomial(5, 11, 3) == 0);
    CHECK(qnomial(5, 10, 3) == 1);
}

TEST_CASE("cache order does not matter") {
    // compute a high row first, then a low one, then one in between
    const BigInt high = qnomial(90, 60, 3);
    const BigInt low = qnomial(10, 7, 3);
    const BigInt mid = qnomial(45, 30, 3);
    BigInt sum = 0;
    for (const auto& c : qnomial_row(45, 3)->coeffs) sum += c;
    CHECK(sum == ipow(3, 45));
    CHECK(low == tuple_counts(10, 3)[7]);
    CHECK(high > mid);
}

TEST_CASE("monomial space sizes") {
    CHECK(mspace_size(1, 1, 3) == 2);
    CHECK(mspace_size(4, 8, 3) == 81);
    CHECK(mspace_size(6, 4, 3) == 168);
    CHECK(mspace_size(6, 100, 3) == 729);
    CHECK(mspace_size(0, 0, 3) == 1);
    CHECK_THROWS_AS(mspace_size(3, -1, 3), DomainError);
}

TEST_CASE("series coefficient bound") {
    CHECK(series_coeff_bound(6, 3) == 414);
    CHECK(series_coeff_bound(3, 3) == 24);
    for (int q : {2, 3, 5, 8}) CHECK(series_coeff_bound(0, q) == 2);
    CHECK(series_coeff_bound(3, 2) == 2 * 3 + 3 * 1);
    CHECK(series_coeff_bound(1, 4) == 2 * 1 + 3 * 1);
    try {
        (void)series_coeff_bound(4, 3);
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("one has to replace n by 3n") != std::string::npos);
    }
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(qnomial_row(-1, 3), DomainError);
    CHECK_THROWS_AS(qnomial_row(3, 1), DomainError);
    CHECK_THROWS_AS(qnomial(2, 0, 0), DomainError);
}

TEST_CASE("property: symmetry, endpoints, length and row sum for n <= 50") {
    for (int q = 2; q <= 6; ++q) {
        for (int n = 0; n <= 50; ++n) {
            const auto row = qnomial_row(n, q);
            REQUIRE(row->coeffs.size() == static_cast<std::size_t>((q - 1) * n + 1));
            CHECK(row->coeffs.front() == 1);
            CHECK(row->coeffs.back() == 1);
            BigInt sum = 0;
            bool symmetric = true;
            for (long k = 0; k <= row->degree(); ++k) {
                sum += row->at(k);
                symmetric = symmetric && row->at(k) == row->at(row->degree() - k);
            }
            CHECK(symmetric);
            CHECK(sum == ipow(q, n));
        }
    }
}

TEST_CASE("property: Pascal recurrence on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_q(2, 9), pick_n(1, 120);
    for (int trial = 0; trial < 400; ++trial) {
        const int q = pick_q(rng), n = pick_n(rng);
        std::uniform_int_distribution<long> pick_k(-3, static_cast<long>(q - 1) * n + 3);
        const long k = pick_k(rng);
        BigInt sum = 0;
        for (int j = 0; j < q; ++j) sum += qnomial(n - 1, k - j, q);
        CHECK(sum == qnomial(n, k, q));
    }
}

TEST_CASE("property: monomial space size is nondecreasing and saturates") {
    for (int n = 0; n <= 20; ++n) {
        BigInt previous = 0;
        for (long d = 0; d <= 2L * n + 3; ++d) {
            const BigInt m = mspace_size(n, d, 3);
            CHECK(m >= previous);
            previous = m;
        }
        CHECK(previous == ipow(3, n));
    }
}

TEST_CASE("property: series bound equals the subtracted sum for n = 0 mod 3") {
    for (int n = 0; n <= 300; n += 3) {
        BigInt below = 0;
        for (long k = 0; k <= 2L * n / 3; ++k) below += qnomial(n, k, 3);
        CHECK(series_coeff_bound(n, 3) == 3 * below - qnomial(n, 2L * n / 3, 3));
    }
}

}  // TEST_SUITE
