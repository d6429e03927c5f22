#include "doctest.h"

#include "yoknot/nested.hpp"

#include "test_support.hpp"

using namespace yoknot;
using yoknot::testing::random_word;

namespace {

// Embeds a level-j element into a higher level through the unit keys.
NestedElement nested_embed(const AlgebraParams& params, NestedElement x, int level) {
    while (x.level() < level) {
        NestedElement up = NestedElement::zero(params, x.level() + 1);
        up.add_sub(params, NestedKey{x.level(), 0, 0}, std::move(x));
        x = std::move(up);
    }
    return x;
}

TraceParams random_trace_params(Rng& rng, const ParamsPtr& params) {
    if (params->affine()) {
        uint64_t salt = static_cast<uint64_t>(rng.range(1, 1 << 20));
        ParamsPtr p = params;
        return TraceParams::with_generator(
            params, params->scalar(rng.nonzero_rational()), [p, salt](int a, int b) {
                if (a == 0 && b == 0) return p->scalar_one();
                long h = static_cast<long>((static_cast<uint64_t>(a * 131 + b * 31) ^ salt) % 13) - 6;
                return p->scalar(Rational(h, 1 + ((a + 7 * b) % 3 + 3) % 3));
            });
    }
    TraceParams::Table table;
    for (int a = 0; a < params->m; ++a)
        for (int b = 0; b < params->d; ++b)
            table[{a, b}] = (a == 0 && b == 0) ? params->scalar_one() : params->scalar(rng.rational());
    return TraceParams::from_table(params, params->scalar(rng.nonzero_rational()), std::move(table));
}

Word w_basis_word(int k, int J, int a, int b) {
    Word word;
    for (int i = J; i >= 1; --i) word.push_back(Letter::g_inv(i));
    for (int r = 0; r < (a < 0 ? -a : a); ++r) word.push_back(a < 0 ? Letter::x1_inv() : Letter::x1());
    for (int r = 0; r < b; ++r) word.push_back(Letter::t(1));
    for (int i = 1; i <= k - 1; ++i) word.push_back(Letter::g(i));
    return word;
}

}  // namespace

TEST_CASE("nested identity and single-letter words") {
    auto p = make_params(2, 2, 2);
    NestedElement one = NestedElement::identity(*p, 2);
    CHECK(word_to_nested(p, {}) == one);

    NestedElement g1 = word_to_nested(p, {Letter::g(1)});
    REQUIRE(g1.level() == 2);
    REQUIRE(g1.sub().size() == 1);
    const auto& [key, sub] = *g1.sub().begin();
    CHECK(key == NestedKey{0, 0, 0});
    CHECK(sub == NestedElement::identity(*p, 1));
}

TEST_CASE("left multiplication rules against the canonical engine") {
    Rng rng(31);
    for (auto [d, m, n] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {2, 2, 2}, {1, 2, 3}, {2, 2, 3}, {2, kAffineM, 2}, {3, kAffineM, 2}}) {
        auto p = make_params(d, m, n);
        for (int it = 0; it < 60; ++it) {
            Word word = random_word(rng, *p, rng.range(0, 5));
            NestedElement nx = word_to_nested(p, word);
            CanonicalElement direct = word_to_element(p, word);
            CHECK(nested_to_canonical(p, nx) == direct);
        }
    }
}

TEST_CASE("relative trace base cases") {
    auto p = make_params(3, 2, 3);
    Rng rng(32);
    TraceParams tp = random_trace_params(rng, p);

    // tr_k(1) = x(0,0) = 1
    NestedElement one = NestedElement::identity(*p, 3);
    CHECK(relative_trace(tp, one) == NestedElement::identity(*p, 2));

    // tr_3(g_2) = z * 1
    NestedElement g2 = word_to_nested(p, {Letter::g(2)});
    CHECK(relative_trace(tp, g2) == tp.z() * NestedElement::identity(*p, 2));

    // tr_1(X_1^a t_1^b) = x_{a,b}
    auto p1 = make_params(3, 2, 1);
    TraceParams tp1 = random_trace_params(rng, p1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b) {
            Word word;
            for (int r = 0; r < a; ++r) word.push_back(Letter::x1());
            for (int r = 0; r < b; ++r) word.push_back(Letter::t(1));
            NestedElement x = word_to_nested(p1, word);
            CHECK(relative_trace(tp1, x).scalar_value() == tp1.x_value(a, b));
        }
}

TEST_CASE("markov trace closed-form examples") {
    auto p = make_params(2, 2, 2);
    Rng rng(33);
    TraceParams tp = random_trace_params(rng, p);

    CHECK(markov_trace(tp, NestedElement::identity(*p, 2)) == p->scalar_one());

    // tau(X_1^a t_1^b g_1 X_1^{a'} t_1^{b'}) = z x_{a+a', b+b'};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    Word word;
                    for (int r = 0; r < a; ++r) word.push_back(Letter::x1());
                    for (int r = 0; r < b; ++r) word.push_back(Letter::t(1));
                    word.push_back(Letter::g(1));
                    for (int r = 0; r < a2; ++r) word.push_back(Letter::x1());
                    for (int r = 0; r < b2; ++r) word.push_back(Letter::t(1));
                    CHECK(markov_trace(tp, word_to_nested(p, word)) == tp.z() * tp.x_value(a + a2, b + b2));
                }

    // tau(g_1 g_2) = z^2 at n=3
    auto p3 = make_params(2, 2, 3);
    TraceParams tp3 = random_trace_params(rng, p3);
    CHECK(markov_trace(tp3, word_to_nested(p3, {Letter::g(1), Letter::g(2)})) == tp3.z() * tp3.z());
}

TEST_CASE("markov trace axioms on random words") {
    Rng rng(34);
    for (auto [d, m, n] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 3}, {1, 2, 3}, {2, 2, 3}, {2, kAffineM, 2}}) {
        auto p = make_params(d, m, n);
        TraceParams tp = random_trace_params(rng, p);

        // centrality
        for (int it = 0; it < 60; ++it) {
            Word x = random_word(rng, *p, rng.range(0, 4));
            Word y = random_word(rng, *p, rng.range(0, 4));
            Word xy = x, yx = y;
            xy.insert(xy.end(), y.begin(), y.end());
            yx.insert(yx.end(), x.begin(), x.end());
            CHECK(markov_trace(tp, word_to_nested(p, xy)) == markov_trace(tp, word_to_nested(p, yx)));
        }

        // Markov property tau(g_{k-1} u) = z tau(u) for u below level k
        for (int k = 2; k <= n; ++k) {
            for (int it = 0; it < 25; ++it) {
                auto pu = make_params(d, m, k - 1);
                Word u = random_word(rng, *pu, rng.range(0, 4));
                Word gu;
                gu.push_back(Letter::g(k - 1));
                gu.insert(gu.end(), u.begin(), u.end());
                CHECK(markov_trace(tp, word_to_nested(p, gu)) ==
                      tp.z() * markov_trace(tp, word_to_nested(p, u)));
            }
        }

        // framing property tau(tilde X_k^a t_k^b u) = x_{a,b} tau(u)
        for (int k = 1; k <= n; ++k) {
            for (int it = 0; it < 12; ++it) {
                auto pu = make_params(d, m, std::max(1, k - 1));
                Word u = k == 1 ? Word{} : random_word(rng, *pu, rng.range(0, 3));
                int a = p->affine() ? rng.range(-2, 2) : rng.range(0, m - 1);
                int b = rng.range(0, d - 1);
                Word word = w_basis_word(k, k - 1, a, b);
                word.insert(word.end(), u.begin(), u.end());
                CHECK(markov_trace(tp, word_to_nested(p, word)) ==
                      tp.x_value(a, b) * markov_trace(tp, word_to_nested(p, u)));
            }
        }
    }
}

TEST_CASE("relative trace identities") {
    Rng rng(35);
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, kAffineM}}) {
        const int k = 3;
        auto p = make_params(d, m, k);
        TraceParams tp = random_trace_params(rng, p);

        // tr_k(t_k Z) = tr_k(Z t_k)
        for (int it = 0; it < 30; ++it) {
            Word zw = random_word(rng, *p, rng.range(0, 4));
            Word tz = {Letter::t(k)};
            tz.insert(tz.end(), zw.begin(), zw.end());
            Word zt = zw;
            zt.push_back(Letter::t(k));
            CHECK(relative_trace(tp, word_to_nested(p, tz)) == relative_trace(tp, word_to_nested(p, zt)));
        }

        // tr_k(g_{k-1}^{eps} u g_{k-1}^{-eps}) = tr_{k-1}(u) for u in Y(k-1)
        auto pu = make_params(d, m, k - 1);
        TraceParams tpu = random_trace_params(rng, pu);
        for (int eps : {1, -1}) {
            for (int it = 0; it < 20; ++it) {
                Word u = random_word(rng, *pu, rng.range(0, 4));
                Word conj;
                conj.push_back(eps > 0 ? Letter::g(k - 1) : Letter::g_inv(k - 1));
                conj.insert(conj.end(), u.begin(), u.end());
                conj.push_back(eps > 0 ? Letter::g_inv(k - 1) : Letter::g(k - 1));
                NestedElement lhs = relative_trace(tp, word_to_nested(p, conj));
                NestedElement rhs = relative_trace(tp, word_to_nested(pu, u));
                CHECK(lhs == nested_embed(*p, rhs, k - 1));
            }
        }

        // tr_{k-1}(tr_k(g_{k-1} Z)) = tr_{k-1}(tr_k(Z g_{k-1}))
        for (int it = 0; it < 30; ++it) {
            Word zw = random_word(rng, *p, rng.range(0, 4));
            Word gz = {Letter::g(k - 1)};
            gz.insert(gz.end(), zw.begin(), zw.end());
            Word zg = zw;
            zg.push_back(Letter::g(k - 1));
            CHECK(relative_trace(tp, relative_trace(tp, word_to_nested(p, gz))) ==
                  relative_trace(tp, relative_trace(tp, word_to_nested(p, zg))));
        }
    }
}

TEST_CASE("zero-parameter trace agrees across engines") {
    Rng rng(36);
    for (auto [d, m, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {1, 2, 2}, {2, 2, 2}}) {
        auto p = make_params(d, m, n);
        TraceParams tp = zero_trace_params(p);
        for (int it = 0; it < 200; ++it) {
            Word w = random_word(rng, *p, rng.range(0, 5));
            CHECK(markov_trace(tp, word_to_nested(p, w)) == zero_trace_canonical(word_to_element(p, w)));
        }
    }
}

TEST_CASE("zero trace on canonical monomials") {
    auto p = make_params(2, 2, 2);
    CHECK(zero_trace_canonical(CanonicalElement::unit(p)) == p->scalar_one());
    CanonicalElement x = multiply(gen_x1(p), multiply(gen_t(p, 2), gen_g(p, 1)));
    CHECK(zero_trace_canonical(x) == p->scalar_zero());
}

TEST_CASE("missing affine table entries are an error") {
    auto p = make_params(2, kAffineM, 2);
    TraceParams::Table table;
    table[{0, 0}] = p->scalar_one();
    table[{0, 1}] = p->scalar_zero();
    TraceParams tp = TraceParams::from_table(p, p->scalar(Rational(1, 2)), table);
    CHECK_THROWS_AS(tp.x_value(1, 0), MathError);
}
