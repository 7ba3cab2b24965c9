#include "capset/bounds.hpp"
#include "capset/errors.hpp"

#include "doctest.h"

using namespace capset;

TEST_SUITE("bounds") {

TEST_CASE("bound for a fixed d") {
    CHECK(bound_for_d(6, 8).value == 414);
    CHECK(bound_for_d(6, 7).value == 324);
    CHECK(bound_for_d(1, 1).value == 3);
    CHECK(bound_for_d(0, 0).value == 2);
    CHECK(bound_for_d(6, 7).d == 7);
    CHECK(bound_for_d(6, 7).method == BoundMethod::ForD);
}

TEST_CASE("bound for d rejects bad input") {
    CHECK_THROWS_AS(bound_for_d(3, -1), DomainError);
    CHECK_THROWS_AS(bound_for_d(3, 7), DomainError);
    CHECK_THROWS_AS(bound_for_d(3, 2, 5), UnsupportedError);
}

TEST_CASE("optimal d") {
    const auto one = optimal_bound(1);
    CHECK(one.d == 1);
    CHECK(one.value == 3);
    const auto zero = optimal_bound(0);
    CHECK(zero.d == 0);
    CHECK(zero.value == 2);
    const auto six = optimal_bound(6);
    CHECK(six.value <= 324);
    CHECK(six.method == BoundMethod::Optimal);
}

TEST_CASE("theorem bound") {
    CHECK(theorem_bound(3).value == 30);
    CHECK(theorem_bound(6).value == 504);
    CHECK(theorem_bound(1).value == 3);
    CHECK(theorem_bound(0).value == 3);
}

TEST_CASE("sharp bound and its identities") {
    const auto six = sharp_bound(6);
    CHECK(six.value == 414);
    CHECK(six.identities.size() == 2);
    CHECK(six.identities_pass());
    const auto three = sharp_bound(3);
    CHECK(three.value == 24);
    CHECK(three.identities_pass());
    CHECK(sharp_bound(0).value == 2);
    CHECK_THROWS_AS(sharp_bound(4), DomainError);
}

TEST_CASE("series bound report") {
    const auto r = series_bound(6, 3);
    CHECK(r.value == 414);
    CHECK(r.method == BoundMethod::Series);
    CHECK(series_bound(3, 4).value == series_coeff_bound(3, 4));
}

TEST_CASE("method names") {
    CHECK(to_string(BoundMethod::ForD) == "for_d");
    CHECK(to_string(BoundMethod::Optimal) == "optimal");
    CHECK(to_string(BoundMethod::Theorem) == "theorem");
    CHECK(to_string(BoundMethod::Sharp) == "sharp");
    CHECK(to_string(BoundMethod::Series) == "series");
}

TEST_CASE("property: optimum is below every d, n <= 60") {
    for (int n = 0; n <= 60; ++n) {
        const auto best = optimal_bound(n);
        CHECK(best.value >= 1);
        for (long d = 0; d <= 2L * n; ++d) {
            const BigInt v = bound_for_d(n, d).value;
            CHECK(v >= best.value);
            if (d < *best.d) CHECK(v > best.value);  // ties go to the smaller d
        }
    }
}

TEST_CASE("property: identity chain and sharp <= theorem, n <= 300") {
    for (int n = 0; n <= 300; n += 3) {
        const auto sharp = sharp_bound(n);
        CHECK(sharp.identities_pass());
        CHECK(sharp.value == bound_for_d(n, 4L * n / 3).value);
        CHECK(sharp.value == series_coeff_bound(n, 3));
        CHECK(sharp.value == theorem_bound(n).value - qnomial(n, 2L * n / 3, 3));
        CHECK(sharp.value <= theorem_bound(n).value);
    }
}

TEST_CASE("odd d beats 4n/3 at n = 6") {
    CHECK(optimal_bound(6).value < sharp_bound(6).value);
}

}  // TEST_SUITE
