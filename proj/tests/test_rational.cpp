#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace orbilift;

TEST_CASE("BigInt basics") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(1).is_one());
    CHECK((BigInt(7) + BigInt(-7)).is_zero());
    CHECK(BigInt(-5) * BigInt(-3) == BigInt(15));
    CHECK(BigInt(100) / BigInt(7) == BigInt(14));
    CHECK(BigInt(100) % BigInt(7) == BigInt(2));
    CHECK(BigInt(-100) / BigInt(7) == BigInt(-14));
    CHECK(BigInt(-100) % BigInt(7) == BigInt(-2));
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)) == BigInt(12));
    CHECK(BigInt(10).pow(20) == BigInt::from_string("100000000000000000000"));
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), Error);
}

TEST_CASE("BigInt large arithmetic round-trips") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int k = 0; k < 200; ++k) {
        BigInt a = BigInt(d(rng)) * BigInt(d(rng)) * BigInt(d(rng));
        BigInt b = BigInt(d(rng)) * BigInt(d(rng));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("BigRational canonical form") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(-2, -4) == BigRational(1, 2));
    CHECK(BigRational(2, -4) == BigRational(-1, 2));
    CHECK(BigRational(0, 5) == BigRational(0));
    CHECK(BigRational(0, 5).den().is_one());
    CHECK(BigRational(3, 7).to_string() == "3/7");
    CHECK_THROWS_AS(BigRational(1, 0), Error);
}

TEST_CASE("BigRational field axioms on random inputs") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        BigRational a = testutil::random_rational(rng);
        BigRational b = testutil::random_rational(rng);
        BigRational c = testutil::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == BigRational(1));
    }
}
