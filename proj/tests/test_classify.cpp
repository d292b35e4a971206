#include "helpers.hpp"

#include <doctest.h>

#include <numeric>

using namespace ckt;

TEST_CASE("commensurate exponents on closed-form inputs") {
    {
        const auto r = commensurate_exponents({0.5, 0.25});
        REQUIRE(r.has_value());
        CHECK(r->first == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r->second == std::vector<long>{1, 2});
    }
    {
        // lambda the positive root of t + t^2 = 1
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        const auto r = commensurate_exponents({g, g * g});
        REQUIRE(r.has_value());
        CHECK(r->first == doctest::Approx(0.6180339887498949).epsilon(1e-12));
        CHECK(r->second == std::vector<long>{1, 2});
    }
    {
        const auto r = commensurate_exponents({0.5, 0.5, 0.5});
        REQUIRE(r.has_value());
        CHECK(r->first == doctest::Approx(0.5));
        CHECK(r->second == std::vector<long>{1, 1, 1});
    }
    CHECK_THROWS_AS(commensurate_exponents({0.5, 1.5}), DomainError);
}

TEST_CASE("classify_type verdicts") {
    {
        const auto c = classify_type({2.0 / 3.0, 0.5});
        CHECK(c.kind == TypeClassification::Kind::III_one);
        CHECK(c.bounds.pmax == 64);
        // cross-check with the exhaustive exponent search
        CHECK(classify_brute_force({2.0 / 3.0, 0.5}, 64, 1e-9) == std::nullopt);
    }
    {
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        const auto c = classify_type({g, g * g});
        REQUIRE(c.kind == TypeClassification::Kind::III_lambda);
        CHECK(c.lambda == doctest::Approx(g).epsilon(1e-12));
        CHECK(c.exponents == std::vector<long>{1, 2});
    }
    {
        const auto c = classify_type({0.5, 0.5});
        REQUIRE(c.kind == TypeClassification::Kind::III_lambda);
        CHECK(c.lambda == doctest::Approx(0.5));
        CHECK(c.exponents == std::vector<long>{1, 1});
    }
    {
        // the 3x3 fixture point: ln(1/2)/ln(1/3) has no small rational form
        const auto c = classify_type({1.0 / 3.0, 1.0 / 3.0, 0.5});
        CHECK(c.kind == TypeClassification::Kind::III_one);
        CHECK(classify_brute_force({1.0 / 3.0, 1.0 / 3.0, 0.5}, 64, 1e-9) == std::nullopt);
    }
}

TEST_CASE("classifier round-trip on random commensurate vectors") {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> lam(0.1, 0.9);
    std::uniform_int_distribution<long> expo(1, 8);
    std::uniform_int_distribution<std::size_t> dim(2, 4);
    int done = 0;
    while (done < 200) {
        const std::size_t n = dim(rng);
        std::vector<long> p(n);
        long g = 0;
        for (auto& pi : p) {
            pi = expo(rng);
            g = std::gcd(g, pi);
        }
        if (g != 1) continue;
        const double lambda = lam(rng);
        std::vector<double> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = std::pow(lambda, static_cast<double>(p[i]));
        const auto c = classify_type(a);
        REQUIRE(c.kind == TypeClassification::Kind::III_lambda);
        CHECK(c.exponents == p);
        CHECK(c.lambda == doctest::Approx(lambda).epsilon(1e-9));

        // uniqueness: a second verifying pair distinct from (lambda, p) would
        // contradict the exhaustive search result
        const auto brute = classify_brute_force(a, 8, 1e-9);
        REQUIRE(brute.has_value());
        CHECK(brute->second == p);
        ++done;
    }
}

TEST_CASE("classifier permutation equivariance and gcd normalization") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> lam(0.15, 0.85);
    for (int trial = 0; trial < 50; ++trial) {
        const double lambda = lam(rng);
        std::vector<long> p{1 + trial % 5, 2 + trial % 3, 3 + trial % 4};
        long g = std::gcd(std::gcd(p[0], p[1]), p[2]);
        for (auto& pi : p) pi /= g;
        std::vector<double> a(3);
        for (std::size_t i = 0; i < 3; ++i) a[i] = std::pow(lambda, static_cast<double>(p[i]));

        const auto c = classify_type(a);
        REQUIRE(c.kind == TypeClassification::Kind::III_lambda);
        long got_gcd = 0;
        for (long pi : c.exponents) got_gcd = std::gcd(got_gcd, pi);
        CHECK(got_gcd == 1);

        // permute and compare
        std::vector<std::size_t> perm{2, 0, 1};
        std::vector<double> pa(3);
        for (std::size_t i = 0; i < 3; ++i) pa[i] = a[perm[i]];
        const auto cp = classify_type(pa);
        REQUIRE(cp.kind == TypeClassification::Kind::III_lambda);
        CHECK(cp.lambda == doctest::Approx(c.lambda).epsilon(1e-12));
        for (std::size_t i = 0; i < 3; ++i) CHECK(cp.exponents[i] == c.exponents[perm[i]]);
    }
}
