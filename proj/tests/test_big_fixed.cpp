#include "capset/big_fixed.hpp"

#include "doctest.h"

#include <random>

using namespace capset;

TEST_SUITE("big_fixed") {

TEST_CASE("integer roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(icbrt(26) == 2);
    CHECK(icbrt(27) == 3);
    CHECK(icbrt(-27) == -3);
    CHECK(pow10(3) == 1000);
}

TEST_CASE("property: integer roots bracket their input") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt n = BigInt(static_cast<unsigned long>(rng())) * BigInt(static_cast<unsigned long>(rng())) + trial;
        const BigInt s = isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
        const BigInt c = icbrt(n);
        CHECK(c * c * c <= n);
        CHECK((c + 1) * (c + 1) * (c + 1) > n);
    }
}

TEST_CASE("parse and print") {
    CHECK(BigFixed::parse("3.250").to_string() == "3.250");
    CHECK(BigFixed::parse("-0.05").to_string() == "-0.05");
    CHECK(BigFixed::parse("12").scale() == 0);
    CHECK(BigFixed::parse("-0.05").sign() == -1);
    CHECK(BigFixed::from_ratio(1, 3, 5).to_string() == "0.33333");
    CHECK(BigFixed::from_ratio(2, 3, 5).to_string() == "0.66667");
    CHECK(BigFixed::from_int(7, 2).to_string() == "7.00");
}

TEST_CASE("arithmetic at mixed scales") {
    const BigFixed a = BigFixed::parse("1.5");
    const BigFixed b = BigFixed::parse("0.25");
    CHECK((a + b).to_string() == "1.75");
    CHECK((a - b).to_string() == "1.25");
    CHECK((a * b).to_string() == "0.38");  // 0.375 rounded at scale 2
    CHECK((a / b).to_string() == "6.00");
    CHECK((a * 4L).to_string() == "6.0");
    CHECK((a / 4L).to_string() == "0.4");
    CHECK(a > b);
    CHECK(BigFixed::parse("2.50") == BigFixed::parse("2.5"));
    CHECK(BigFixed::parse("2.345").rescale(2).to_string() == "2.35");
}

TEST_CASE("roots, powers and pi") {
    CHECK(sqrt(BigFixed::from_int(2, 20)).to_string() == "1.41421356237309504880");
    CHECK(cbrt(BigFixed::from_int(2, 20)).to_string() == "1.25992104989487316476");
    CHECK(pow(BigFixed::parse("1.1"), 3).to_string() == "1.3");
    CHECK(pow(BigFixed::parse("1.10"), 3).to_string() == "1.33");
    CHECK(pi(30).to_string() == "3.141592653589793238462643383280");
    CHECK(pi(5).to_double() == doctest::Approx(3.14159));
}

}  // TEST_SUITE
