#include "doctest.h"

#include "yoknot/algebra.hpp"
#include "yoknot/verify.hpp"

#include "test_support.hpp"

using namespace yoknot;
using yoknot::testing::random_element;
using yoknot::testing::random_word;

namespace {

CanonicalElement from_word(const ParamsPtr& p, std::initializer_list<Letter> ls) {
    return word_to_element(p, Word(ls));
}

}  // namespace

TEST_CASE("generators are single monomials") {
    auto p = make_params(2, 1, 2);
    CanonicalElement t1 = gen_t(p, 1);
    REQUIRE(t1.term_count() == 1);
    const auto& [key, c] = *t1.terms().begin();
    CHECK(key.b == std::vector<int>{1, 0});
    CHECK(key.a == std::vector<int>{0, 0});
    CHECK(key.w.is_identity());
    CHECK(c == p->scalar_one());

    CanonicalElement g1 = gen_g(p, 1);
    REQUIRE(g1.term_count() == 1);
    CHECK(g1.terms().begin()->first.w == Permutation::transposition(2, 1));

    auto p2 = make_params(2, 2, 2);
    CanonicalElement x1 = gen_x1(p2);
    REQUIRE(x1.term_count() == 1);
    CHECK(x1.terms().begin()->first.a == std::vector<int>{1, 0});

    CHECK_THROWS_AS(gen_t(p, 3), MathError);
    CHECK_THROWS_AS(gen_g(p, 2), MathError);
}

TEST_CASE("quadratic relation g1*g1 = 1 + (q-q^-1) e1 g1") {
    for (auto [d, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}, {2, kAffineM}}) {
        auto p = make_params(d, m, 2);
        CanonicalElement g1 = gen_g(p, 1);
        CanonicalElement lhs = multiply(g1, g1);
        CanonicalElement rhs = CanonicalElement::unit(p) + p->q_diff() * multiply(e_idempotent(p, 1), g1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("X1 and X2 commute; braid relation") {
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {2, kAffineM}}) {
        auto p = make_params(d, m, 3);
        auto xs = jm_x(p);
        CHECK(multiply(xs[0], xs[1]) == multiply(xs[1], xs[0]));
        CanonicalElement g1 = gen_g(p, 1), g2 = gen_g(p, 2);
        CHECK(multiply(g1, multiply(g2, g1)) == multiply(g2, multiply(g1, g2)));
    }
}

TEST_CASE("e_i idempotent and central against g_i") {
    auto triv = make_params(1, 1, 2);
    CHECK(e_idempotent(triv, 1) == CanonicalElement::unit(triv));

    auto p = make_params(3, 1, 2);
    CanonicalElement e1 = e_idempotent(p, 1);
    CHECK(multiply(e1, e1) == e1);
    CanonicalElement g1 = gen_g(p, 1);
    CHECK(multiply(g1, e1) == multiply(e1, g1));
}

TEST_CASE("inverses") {
    auto p = make_params(2, 2, 2);
    CanonicalElement g1 = gen_g(p, 1);
    CHECK(multiply(g1, inverse_g(p, 1)) == CanonicalElement::unit(p));
    CHECK(multiply(inverse_g(p, 1), g1) == CanonicalElement::unit(p));

    // m=2: X1^{-1} = -gamma_0^{-1} (X1 + gamma_1)
    CanonicalElement x1inv = inverse_x1(p);
    RatFunc g0(p->gamma[0]), g1c(p->gamma[1]);
    CanonicalElement expect = -(g0.inverse()) * (gen_x1(p) + g1c * CanonicalElement::unit(p));
    CHECK(x1inv == expect);
    CHECK(multiply(gen_x1(p), x1inv) == CanonicalElement::unit(p));
    CHECK(multiply(x1inv, gen_x1(p)) == CanonicalElement::unit(p));

    auto pa = make_params(2, kAffineM, 2);
    CanonicalElement xinv = inverse_x1(pa);
    REQUIRE(xinv.term_count() == 1);
    CHECK(xinv.terms().begin()->first.a == std::vector<int>{-1, 0});
    CHECK(multiply(gen_x1(pa), xinv) == CanonicalElement::unit(pa));
}

TEST_CASE("m=1 collapses X1 to v1") {
    auto p = make_params(2, 1, 2);
    CHECK(gen_x1(p) == RatFunc::v_power(2, 1, 1, 1) * CanonicalElement::unit(p));
}

TEST_CASE("jm element properties") {
    auto p = make_params(2, 2, 3);
    auto xs = jm_x(p);
    auto ts = std::vector<CanonicalElement>{gen_t(p, 1), gen_t(p, 2), gen_t(p, 3)};
    // {t_*, X_*} is a commutative family
    std::vector<CanonicalElement> fam;
    for (auto& x : xs) fam.push_back(x);
    for (auto& t : ts) fam.push_back(t);
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
            CHECK(multiply(fam[i], fam[j]) == multiply(fam[j], fam[i]));

    // g_j X_i = X_i g_j for j != i-1, i
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) {
            if (j == i - 1 || j == i) continue;
            CanonicalElement gj = gen_g(p, j);
            CHECK(multiply(gj, xs[static_cast<size_t>(i - 1)]) == multiply(xs[static_cast<size_t>(i - 1)], gj));
        }
}

TEST_CASE("tilde X_i^a t_i^b matches its inductive word") {
    auto p = make_params(2, 2, 3);
    auto xt = jm_x_tilde(p);
    for (int i = 1; i <= 3; ++i) {
        for (int a = 0; a <= 2; ++a) {
            for (int b = 0; b <= 1; ++b) {
                // W^{(i)}_{i-1,a,b} = g_{i-1}^{-1}..g_1^{-1} X_1^a t_1^b g_1..g_{i-1}
                Word word;
                for (int k = i - 1; k >= 1; --k) word.push_back(Letter::g_inv(k));
                for (int r = 0; r < a; ++r) word.push_back(Letter::x1());
                for (int r = 0; r < b; ++r) word.push_back(Letter::t(1));
                for (int k = 1; k <= i - 1; ++k) word.push_back(Letter::g(k));
                CanonicalElement w_elem = word_to_element(p, word);

                CanonicalElement expect = CanonicalElement::unit(p);
                for (int r = 0; r < a; ++r) expect = multiply(expect, xt[static_cast<size_t>(i - 1)]);
                for (int r = 0; r < b; ++r) expect = multiply(expect, gen_t(p, i));
                CHECK(w_elem == expect);
            }
        }
    }
}

TEST_CASE("word_to_element examples") {
    auto p = make_params(2, 2, 2);
    CanonicalElement lhs = from_word(p, {Letter::x1(), Letter::g(1), Letter::x1(), Letter::g(1)});
    CanonicalElement rhs = from_word(p, {Letter::g(1), Letter::x1(), Letter::g(1), Letter::x1()});
    CHECK(lhs == rhs);

    CHECK(word_to_element(p, {}) == CanonicalElement::unit(p));

    Word td(static_cast<size_t>(p->d), Letter::t(1));
    CHECK(word_to_element(p, td) == CanonicalElement::unit(p));
}

TEST_CASE("eta involution") {
    auto p = make_params(2, 2, 2);
    CHECK(eta_involution(CanonicalElement::unit(p)) == CanonicalElement::unit(p));
    CHECK(eta_involution(gen_g(p, 1)) == inverse_g(p, 1));

    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
        CanonicalElement x = random_element(rng, p);
        CHECK(eta_involution(eta_involution(x)) == x);
    }
    // ring homomorphism on a few pairs
    for (int it = 0; it < 10; ++it) {
        CanonicalElement x = random_element(rng, p, 3);
        CanonicalElement y = random_element(rng, p, 3);
        CHECK(eta_involution(multiply(x, y)) == multiply(eta_involution(x), eta_involution(y)));
    }
}

TEST_CASE("eta on the affine instance") {
    auto p = make_params(2, kAffineM, 2);
    Rng rng(6);
    for (int it = 0; it < 25; ++it) {
        CanonicalElement x = random_element(rng, p, 3);
        CHECK(eta_involution(eta_involution(x)) == x);
    }
}

TEST_CASE("projection pi_H") {
    auto p = make_params(3, 2, 2);
    auto target = make_params(1, 2, 2);
    CHECK(project_pi_H(gen_t(p, 1)) == CanonicalElement::unit(target));
    CHECK(project_pi_H(e_idempotent(p, 1)) == CanonicalElement::unit(target));

    Rng rng(9);
    for (int it = 0; it < 100; ++it) {
        CanonicalElement x = random_element(rng, p, 3);
        CanonicalElement y = random_element(rng, p, 3);
        CHECK(project_pi_H(multiply(x, y)) == multiply(project_pi_H(x), project_pi_H(y)));
    }
}

TEST_CASE("projection pi_Y") {
    auto p = make_params(2, 2, 2);
    CHECK(project_pi_Y(gen_x1(p)) == RatFunc::v_power(2, 2, 1, 1) * CanonicalElement::unit(p));
    CHECK(project_pi_Y(gen_g(p, 1)) == gen_g(p, 1));

    // pi_Y of an X-free word is the word itself (pi_Y . iota_Y = id)
    Rng rng(10);
    for (int it = 0; it < 50; ++it) {
        CanonicalElement x = word_to_element(p, random_word(rng, *p, 4, /*with_x=*/false));
        CHECK(project_pi_Y(x) == x);
    }

    auto pa = make_params(2, kAffineM, 2);
    CHECK(project_pi_Y(gen_x1(pa)) == CanonicalElement::unit(pa));
}

TEST_CASE("defining relations hold on all spec instances") {
    for (auto [d, m, n] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 3}, {2, 1, 3}, {1, 2, 3}, {2, 2, 2}, {3, 2, 2}, {2, kAffineM, 2}}) {
        auto p = make_params(d, m, n);
        auto failures = element_relation_failures(p);
        std::string msg = failures.empty() ? std::string() : failures.front();
        CHECK_MESSAGE(failures.empty(), msg);
    }
}

TEST_CASE("lemma formulas formAK/form1/form3") {
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, kAffineM}}) {
        auto p = make_params(d, m, 2);
        auto failures = lemma_formula_failures(p);
        std::string msg = failures.empty() ? std::string() : failures.front();
        CHECK_MESSAGE(failures.empty(), msg);
    }
}

TEST_CASE("associativity on random monomial triples") {
    for (auto [d, m, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, kAffineM, 2}, {1, 2, 3}}) {
        auto p = make_params(d, m, n);
        auto failures = associativity_failures(p, 200, 77);
        std::string msg = failures.empty() ? std::string() : failures.front();
        CHECK_MESSAGE(failures.empty(), msg);
    }
}

TEST_CASE("products keep coefficients in R_m up to 1/d and gamma_0^{-1}") {
    // Denominators stay monomials: no polynomial denominator ever appears.
    Rng rng(12);
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, kAffineM}}) {
        auto p = make_params(d, m, 2);
        for (int it = 0; it < 40; ++it) {
            CanonicalElement x = random_element(rng, p, 4);
            for (const auto& [key, c] : x.terms()) CHECK(c.den().term_count() == 1);
        }
    }
}
