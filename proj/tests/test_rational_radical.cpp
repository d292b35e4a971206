#include "helpers.hpp"

#include <doctest.h>

using namespace ckt;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/3") == q(1, 3));
    CHECK(parse_rational("-7/2") == q(-7, 2));
    CHECK(parse_rational("0.35") == q(7, 20));
    CHECK(parse_rational("2") == q(2));
    CHECK(parse_rational("-1.2e-3") == q(-12, 10000));
    CHECK(parse_rational("2.5e2") == q(250));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);

    const auto v = parse_rational_vector("1/3, 0.5 2");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == q(1, 3));
    CHECK(v[1] == q(1, 2));
    CHECK(v[2] == q(2));
}

TEST_CASE("rational_from_double is exact") {
    for (double x : {0.5, 0.1, -3.25, 1.0 / 3.0, 1e-13, 12345.6789}) {
        CHECK(to_double(rational_from_double(x)) == x);
    }
    CHECK(rational_from_double(0.0) == q(0));
    CHECK(rational_from_double(0.25) == q(1, 4));
}

TEST_CASE("continued fraction reconstruction") {
    CHECK(rational_approx(0.25, 1000000) == q(1, 4));
    CHECK(rational_approx(1.0 / 3.0, 1000000) == q(1, 3));
    CHECK(rational_approx(-2.0 / 7.0, 1000000) == q(-2, 7));
    CHECK(rational_approx(0.0, 1000000) == q(0));

    // The golden ratio's convergents are Fibonacci quotients; the largest
    // denominator below 100 is 89.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(rational_approx(phi, 100) == q(144, 89));
}

TEST_CASE("radical arithmetic is exact") {
    CHECK(Radical::sqrt_of(q(4, 9)).as_rational() == q(2, 3));
    CHECK(Radical::sqrt_of(q(0)).is_zero());
    CHECK_THROWS_AS(Radical::sqrt_of(q(-1)), DomainError);

    // sqrt(12) = 2 sqrt(3)
    CHECK(Radical::sqrt_of(q(12)) == Radical(q(2)) * Radical::sqrt_of(q(3)));
    // sqrt(1/2) * sqrt(2) = 1
    CHECK(Radical::sqrt_of(q(1, 2)) * Radical::sqrt_of(q(2)) == Radical(q(1)));
    // (sqrt(2) + sqrt(3))^2 = 5 + 2 sqrt(6)
    const Radical s = Radical::sqrt_of(q(2)) + Radical::sqrt_of(q(3));
    CHECK(s * s == Radical(q(5)) + Radical(q(2)) * Radical::sqrt_of(q(6)));
    // division by a single-term radical
    CHECK(Radical::sqrt_of(q(6)) / Radical::sqrt_of(q(2)) == Radical::sqrt_of(q(3)));
    CHECK_THROWS_AS(s / s, DomainError);  // multi-term divisor unsupported
    CHECK_THROWS_AS(Radical(q(1)) / Radical(), DomainError);

    CHECK(Radical::sqrt_of(q(2)).to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK((s - s).is_zero());
    CHECK(Radical::sqrt_of(q(3, 4)).str() == "1/2*sqrt(3)");
}

TEST_CASE("radical sqrt cancels with reciprocal sqrt on random rationals") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> d(1, 400);
    for (int k = 0; k < 200; ++k) {
        const Rational r(d(rng), d(rng));
        CHECK(Radical::sqrt_of(r) * Radical::sqrt_of(Rational(1) / r) == Radical(q(1)));
        CHECK(Radical::sqrt_of(r) * Radical::sqrt_of(r) == Radical(r));
    }
}
