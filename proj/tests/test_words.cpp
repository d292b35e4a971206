#include "helpers.hpp"

#include <doctest.h>

using namespace ckt;

namespace {

// Matrix whose first two rows have disjoint continuation sets.
std::shared_ptr<const ZeroOneMatrix> disjoint_rows() {
    return std::make_shared<ZeroOneMatrix>(3, std::vector<int>{0, 1, 0, 0, 0, 1, 1, 1, 0});
}

CKMonomial mono(const std::shared_ptr<const ZeroOneMatrix>& ctx, MultiIndex j, MultiIndex k) {
    return CKMonomial::make(ctx, std::move(j), std::move(k));
}

FormalSum single(const std::shared_ptr<const ZeroOneMatrix>& ctx, MultiIndex j, MultiIndex k) {
    FormalSum f(ctx);
    f.add(q(1), mono(ctx, std::move(j), std::move(k)));
    return f;
}

}  // namespace

TEST_CASE("word admissibility") {
    const auto h = hole3();
    CHECK(is_admissible_word(*h, {2, 0}));        // 3 -> 1 allowed
    CHECK_FALSE(is_admissible_word(*h, {0, 0}));  // 1 -> 1 blocked
    CHECK(is_admissible_word(*h, {}));
    CHECK(is_admissible_word(*h, {1}));
    CHECK_THROWS_AS(is_admissible_word(*h, {3}), DomainError);
}

TEST_CASE("admissible word enumeration") {
    const auto gm = golden_mean();
    const auto words = enumerate_admissible(*gm, 2);
    REQUIRE(words.size() == 3);
    CHECK(words[0] == MultiIndex{0, 0});
    CHECK(words[1] == MultiIndex{0, 1});
    CHECK(words[2] == MultiIndex{1, 0});

    CHECK(enumerate_admissible(*all_ones(2), 3).size() == 8);
    CHECK(enumerate_admissible(*hole3(), 1).size() == 3);
    CHECK_THROWS_AS(enumerate_admissible(*all_ones(2), 30), ResourceError);
    CHECK_THROWS_AS(enumerate_admissible(*all_ones(4), 12, 16, 1000), ResourceError);
}

TEST_CASE("monomial construction and zero detection") {
    const auto h = hole3();
    CHECK(CKMonomial::try_make(h, {0, 0}, {}) == std::nullopt);  // inadmissible word
    CHECK(CKMonomial::try_make(h, {2, 0}, {1}).has_value());
    CHECK_THROWS_AS(CKMonomial::make(h, {0, 0}, {}), DomainError);

    // disjoint continuation sets kill s_J s_K^*
    const auto d = disjoint_rows();
    CHECK(CKMonomial::try_make(d, {0}, {1}) == std::nullopt);
    CHECK(CKMonomial::try_make(d, {0}, {0}).has_value());

    const auto id = mono(h, {}, {});
    CHECK(id.is_identity());
    CHECK(id.str() == "1");
    CHECK(mono(h, {2, 0}, {1}).str() == "s[3,1]*s[2]'");
    CHECK(mono(h, {}, {1}).str() == "s[2]'");
}

TEST_CASE("monomial products: prefix cancellation") {
    const auto o2 = all_ones(2);
    // mismatched prefixes vanish
    CHECK(monomial_product(mono(o2, {0}, {1}), mono(o2, {0}, {0})).is_zero());
    // proper prefix: s_1^* s_{12} = s_2
    {
        const auto p = monomial_product(mono(o2, {}, {0}), mono(o2, {0, 1}, {}));
        REQUIRE(p.size() == 1);
        CHECK(p.terms()[0].second == mono(o2, {1}, {}));
        CHECK(p.terms()[0].first == q(1));
    }
    // identity is neutral on both sides
    {
        const auto m = mono(o2, {0, 1}, {1});
        CHECK(monomial_product(m, mono(o2, {}, {})) == single(o2, {0, 1}, {1}));
        CHECK(monomial_product(mono(o2, {}, {}), m) == single(o2, {0, 1}, {1}));
    }
    CHECK_THROWS_AS(monomial_product(mono(o2, {0}, {}), mono(all_ones(3), {0}, {})),
                    ContextMismatchError);
}

TEST_CASE("monomial products: equal co-words") {
    const auto o2 = all_ones(2);
    // (s_1 s_2^*)(s_2 s_1^*): the middle projection s_2^* s_2 = 1 on the
    // full matrix is redundant, so the product collapses.
    {
        const auto p = monomial_product(mono(o2, {0}, {1}), mono(o2, {1}, {0}));
        CHECK(p == single(o2, {0}, {0}));
    }
    // s_1^* s_1 = 1 on the full 2x2 matrix for the same reason.
    CHECK(monomial_product(mono(o2, {}, {0}), mono(o2, {0}, {})) == FormalSum::identity(o2));

    const auto h = hole3();
    // On the 3x3 fixture s_2^* s_2 is a proper projection: expansion keeps
    // the continuations of row 2 only.
    {
        const auto p = monomial_product(mono(h, {}, {1}), mono(h, {1}, {}));
        FormalSum expected(h);
        expected.add(q(1), mono(h, {0}, {0}));
        expected.add(q(1), mono(h, {2}, {2}));
        CHECK(p == expected);
    }
    // s_3 s_1^* s_1 s_3^* keeps only the continuations of row 1.
    {
        const auto p = monomial_product(mono(h, {2}, {0}), mono(h, {0}, {2}));
        FormalSum expected(h);
        expected.add(q(1), mono(h, {2, 1}, {2, 1}));
        expected.add(q(1), mono(h, {2, 2}, {2, 2}));
        CHECK(p == expected);
    }
}

TEST_CASE("monomial products are associative (random triples)") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> len(0, 3);
    int checked = 0;
    while (checked < 1000) {
        auto m = random_admissible_matrix(rng, 2 + checked % 3);
        auto pick = [&]() -> std::optional<CKMonomial> {
            std::uniform_int_distribution<std::size_t> letter(0, m->n() - 1);
            MultiIndex j(len(rng)), k(len(rng));
            for (auto& l : j) l = letter(rng);
            for (auto& l : k) l = letter(rng);
            return CKMonomial::try_make(m, j, k);
        };
        auto m1 = pick(), m2 = pick(), m3 = pick();
        if (!m1 || !m2 || !m3) continue;
        FormalSum left = product(monomial_product(*m1, *m2), single(m, m3->word(), m3->costar_word()));
        FormalSum right = product(single(m, m1->word(), m1->costar_word()), monomial_product(*m2, *m3));
        CHECK(left == right);
        ++checked;
    }
}

TEST_CASE("formal sums merge like terms") {
    const auto o2 = all_ones(2);
    FormalSum f(o2);
    f.add(q(1, 2), mono(o2, {0}, {0}));
    f.add(q(1, 2), mono(o2, {0}, {0}));
    f.add(q(1), mono(o2, {1}, {}));
    CHECK(f.size() == 2);
    f.add(q(-1), mono(o2, {0}, {0}));
    CHECK(f.size() == 1);
    CHECK(f.str() == "s[2]");
    f *= q(0);
    CHECK(f.is_zero());
    CHECK(f.str() == "0");
}

TEST_CASE("quasi-free state values") {
    const auto p3 = hole3_point();
    const auto h = p3.matrix_ptr();
    CHECK(quasifree_eval_exact(p3, mono(h, {2}, {2})) == q(1, 2));          // x_3
    CHECK(quasifree_eval_exact(p3, mono(h, {2, 0}, {2, 0})) == q(1, 8));    // a_3 x_1
    CHECK(quasifree_eval_exact(p3, mono(h, {0}, {1})) == q(0));             // off-diagonal
    CHECK(quasifree_eval_exact(p3, mono(h, {}, {})) == q(1));               // identity
    CHECK(quasifree_eval(p3, single(h, {2, 0}, {2, 0})) == doctest::Approx(0.125));

    const auto gp = golden_mean_point();
    CHECK(quasifree_eval_exact(gp, mono(gp.matrix_ptr(), {0, 1}, {0, 1})) ==
          q(2, 3) * q(1, 3));  // a_1 x_2

    CHECK_THROWS_AS(quasifree_eval_exact(p3, mono(all_ones(3), {0}, {0})),
                    ContextMismatchError);
}

TEST_CASE("partition of unity at the state level") {
    for (const auto& p : {hole3_point(), golden_mean_point(), o2_half(), o2_thirds()}) {
        auto ctx = p.matrix_ptr();
        for (std::size_t m = 1; m <= 5; ++m) {
            Rational total(0);
            for (const auto& w : enumerate_admissible(*ctx, m))
                total += quasifree_eval_exact(p, CKMonomial::make(ctx, w, w));
            CHECK(total == q(1));
        }
    }
}

TEST_CASE("diagonal monomials have nonnegative state values") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 60) {
        auto m = random_admissible_matrix(rng, 2 + checked % 3);
        auto p = random_exact_point(rng, m);
        if (!p) continue;
        for (const auto& w : enumerate_admissible(*m, 1 + checked % 4)) {
            CHECK(quasifree_eval_exact(*p, CKMonomial::make(m, w, w)) > 0);
        }
        ++checked;
    }
}

TEST_CASE("formal sum expression parsing") {
    const auto h = hole3();
    CHECK(parse_formal_sum(h, "s[3,1]*s[3,1]'") == single(h, {2, 0}, {2, 0}));
    CHECK(parse_formal_sum(h, "1") == FormalSum::identity(h));
    {
        FormalSum expected(h);
        expected.add(q(3, 2), mono(h, {2}, {}));
        expected.add(q(-1), mono(h, {}, {1}));
        CHECK(parse_formal_sum(h, "3/2 s[3] - s[2]'") == expected);
        CHECK(parse_formal_sum(h, "3/2*s[3] - s[2]'") == expected);
    }
    // product inside a term goes through the word calculus
    CHECK(parse_formal_sum(h, "s[3]*s[3]'") == single(h, {2}, {2}));
    CHECK(parse_formal_sum(h, "2") == [&] {
        FormalSum f = FormalSum::identity(h);
        f *= q(2);
        return f;
    }());
    CHECK_THROWS_AS(parse_formal_sum(h, "s[1,1]"), DomainError);  // zero monomial
    CHECK_THROWS_AS(parse_formal_sum(h, "s[4]"), DomainError);
    CHECK_THROWS_AS(parse_formal_sum(h, "s[]"), ParseError);
    CHECK_THROWS_AS(parse_formal_sum(h, "s[1"), ParseError);
    CHECK_THROWS_AS(parse_formal_sum(h, "+"), ParseError);
}
