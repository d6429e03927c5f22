#include "yoknot/verify.hpp"

#include <sstream>

#include "yoknot/representation.hpp"
#include "yoknot/rng.hpp"
#include "yoknot/tableaux.hpp"

namespace yoknot {

namespace {

std::string instance_tag(const AlgebraParams& p) {
    std::ostringstream os;
    os << "Y(" << p.d << "," << (p.affine() ? std::string("inf") : std::to_string(p.m)) << "," << p.n << ")";
    return os.str();
}

}  // namespace

CanonicalElement x_power(const ParamsPtr& params, int i, int a) {
    Word word;
    bool inv = a < 0;
    for (int rep = 0; rep < (inv ? -a : a); ++rep) {
        for (int k = i - 1; k >= 1; --k) word.push_back(inv ? Letter::g_inv(k) : Letter::g(k));
        word.push_back(inv ? Letter::x1_inv() : Letter::x1());
        for (int k = 1; k <= i - 1; ++k) word.push_back(inv ? Letter::g_inv(k) : Letter::g(k));
    }
    return word_to_element(params, word);
}

std::vector<std::string> element_relation_failures(const ParamsPtr& params) {
    std::vector<std::string> failures;
    const int n = params->n;
    const std::string tag = instance_tag(*params);
    auto expect_equal = [&](const CanonicalElement& lhs, const CanonicalElement& rhs, const std::string& what) {
        if (!(lhs == rhs)) failures.push_back(tag + ": " + what);
    };

    CanonicalElement one = CanonicalElement::unit(params);
    std::vector<CanonicalElement> g, t;
    for (int i = 1; i < n; ++i) g.push_back(gen_g(params, i));
    for (int j = 1; j <= n; ++j) t.push_back(gen_t(params, j));

    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j)
            expect_equal(multiply(g[i - 1], g[j - 1]), multiply(g[j - 1], g[i - 1]),
                         "g_" + std::to_string(i) + " g_" + std::to_string(j) + " commute");
        if (i + 1 < n)
            expect_equal(multiply(g[i - 1], multiply(g[i], g[i - 1])),
                         multiply(g[i], multiply(g[i - 1], g[i])),
                         "braid relation at i=" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            expect_equal(multiply(t[i - 1], t[j - 1]), multiply(t[j - 1], t[i - 1]), "t commute");
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            int sij = j == i ? i + 1 : (j == i + 1 ? i : j);
            expect_equal(multiply(t[j - 1], g[i - 1]), multiply(g[i - 1], t[sij - 1]),
                         "t_" + std::to_string(j) + " g_" + std::to_string(i) + " = g t_{s_i(j)}");
        }
    for (int j = 1; j <= n; ++j) {
        CanonicalElement td = one;
        for (int k = 0; k < params->d; ++k) td = multiply(td, t[j - 1]);
        expect_equal(td, one, "t_" + std::to_string(j) + "^d = 1");
    }
    for (int i = 1; i < n; ++i)
        expect_equal(multiply(g[i - 1], g[i - 1]),
                     one + params->q_diff() * multiply(e_idempotent(params, i), g[i - 1]),
                     "quadratic relation at i=" + std::to_string(i));

    CanonicalElement x1 = gen_x1(params);
    if (n >= 2)
        expect_equal(multiply(x1, multiply(g[0], multiply(x1, g[0]))),
                     multiply(g[0], multiply(x1, multiply(g[0], x1))),
                     "X1 g1 X1 g1 = g1 X1 g1 X1");
    for (int i = 2; i < n; ++i)
        expect_equal(multiply(x1, g[i - 1]), multiply(g[i - 1], x1), "X1 g_" + std::to_string(i) + " commute");
    for (int j = 1; j <= n; ++j)
        expect_equal(multiply(x1, t[j - 1]), multiply(t[j - 1], x1), "X1 t_" + std::to_string(j) + " commute");
    if (!params->affine()) {
        CanonicalElement prod = one;
        for (int a = 1; a <= params->m; ++a) {
            RatFunc va = RatFunc::v_power(params->d, params->m, a, 1);
            prod = multiply(prod, x1 - va * one);
        }
        expect_equal(prod, CanonicalElement::zero(params), "(X1-v_1)...(X1-v_m) = 0");
    }
    return failures;
}

std::vector<std::string> representation_relation_failures(const ParamsPtr& params) {
    std::vector<std::string> failures;
    if (params->affine()) return {instance_tag(*params) + ": representations need finite m"};
    const int n = params->n;
    for (const DMPartition& shape : enumerate_dm_partitions(params->d, params->m, params->n)) {
        Representation rep = build_representation(params, shape);
        const std::string tag = instance_tag(*params) + " shape " + shape.str();
        auto expect_equal = [&](const Matrix& lhs, const Matrix& rhs, const std::string& what) {
            if (!matrix_equal(lhs, rhs)) failures.push_back(tag + ": " + what);
        };
        Matrix id = matrix_identity(params, rep.dimension());

        for (int i = 1; i < n; ++i) {
            for (int j = i + 2; j < n; ++j)
                expect_equal(matrix_mul(rep.g[i - 1], rep.g[j - 1]), matrix_mul(rep.g[j - 1], rep.g[i - 1]),
                             "g g distant commute");
            if (i + 1 < n)
                expect_equal(matrix_mul(rep.g[i - 1], matrix_mul(rep.g[i], rep.g[i - 1])),
                             matrix_mul(rep.g[i], matrix_mul(rep.g[i - 1], rep.g[i])), "braid relation");
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                expect_equal(matrix_mul(rep.t[i - 1], rep.t[j - 1]), matrix_mul(rep.t[j - 1], rep.t[i - 1]),
                             "t commute");
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                int sij = j == i ? i + 1 : (j == i + 1 ? i : j);
                expect_equal(matrix_mul(rep.t[j - 1], rep.g[i - 1]), matrix_mul(rep.g[i - 1], rep.t[sij - 1]),
                             "t g relation");
            }
        for (int j = 1; j <= n; ++j) {
            Matrix td = id;
            for (int k = 0; k < params->d; ++k) td = matrix_mul(td, rep.t[j - 1]);
            expect_equal(td, id, "t^d = 1");
        }
        for (int i = 1; i < n; ++i) {
            Matrix ei = rep_e_matrix(rep, i);
            Matrix rhs = matrix_add(id, matrix_scale(matrix_mul(ei, rep.g[i - 1]), params->q_diff()));
            expect_equal(matrix_mul(rep.g[i - 1], rep.g[i - 1]), rhs, "quadratic relation");
        }
        if (n >= 2) {
            Matrix a = matrix_mul(rep.x1, matrix_mul(rep.g[0], matrix_mul(rep.x1, rep.g[0])));
            Matrix b = matrix_mul(rep.g[0], matrix_mul(rep.x1, matrix_mul(rep.g[0], rep.x1)));
            expect_equal(a, b, "X1 g1 X1 g1 relation");
        }
        for (int i = 2; i < n; ++i)
            expect_equal(matrix_mul(rep.x1, rep.g[i - 1]), matrix_mul(rep.g[i - 1], rep.x1), "X1 g distant");
        for (int j = 1; j <= n; ++j)
            expect_equal(matrix_mul(rep.x1, rep.t[j - 1]), matrix_mul(rep.t[j - 1], rep.x1), "X1 t commute");
        Matrix prod = id;
        for (int a = 1; a <= params->m; ++a) {
            RatFunc va = RatFunc::v_power(params->d, params->m, a, 1);
            prod = matrix_mul(prod, matrix_sub(rep.x1, matrix_scale(id, va)));
        }
        expect_equal(prod, matrix_zero(params, rep.dimension()), "cyclotomic relation on X1");
    }
    return failures;
}

std::vector<std::string> lemma_formula_failures(const ParamsPtr& params) {
    std::vector<std::string> failures;
    if (params->n < 2) return failures;
    const std::string tag = instance_tag(*params);
    CanonicalElement one = CanonicalElement::unit(params);
    RatFunc qd = params->q_diff();

    for (int i = 1; i < params->n; ++i) {
        CanonicalElement gi = gen_g(params, i);
        CanonicalElement ei = e_idempotent(params, i);
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                CanonicalElement xia = x_power(params, i, a);
                CanonicalElement xib = x_power(params, i, b);
                CanonicalElement xi1a = x_power(params, i + 1, a);
                CanonicalElement xi1b = x_power(params, i + 1, b);
                // g_i X_i^a X_{i+1}^b = X_i^b X_{i+1}^a g_i -+ (q-q^{-1}) e_i (sum)
                CanonicalElement lhs = multiply(gi, multiply(xia, xi1b));
                CanonicalElement rhs = multiply(xib, multiply(xi1a, gi));
                CanonicalElement corr = CanonicalElement::zero(params);
                if (a >= b)
                    for (int k = 1; k <= a - b; ++k)
                        corr -= multiply(x_power(params, i, a - k), x_power(params, i + 1, b + k));
                else
                    for (int k = 0; k <= b - a - 1; ++k)
                        corr += multiply(x_power(params, i, a + k), x_power(params, i + 1, b - k));
                rhs += qd * multiply(ei, corr);
                if (!(lhs == rhs))
                    failures.push_back(tag + ": g_i X_i^a X_{i+1}^b formula at i=" + std::to_string(i) +
                                       " a=" + std::to_string(a) + " b=" + std::to_string(b));
            }
        }
    }

    // X_1 conjugation formulas at i=1 for a, b in [-2, 2].
    CanonicalElement g1 = gen_g(params, 1);
    CanonicalElement g1inv = inverse_g(params, 1);
    CanonicalElement e1 = e_idempotent(params, 1);
    CanonicalElement x1 = gen_x1(params);
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            CanonicalElement x1a = x_power(params, 1, a);
            CanonicalElement t1b = CanonicalElement::unit(params);
            for (int r = 0; r < ((b % params->d) + params->d) % params->d; ++r)
                t1b = multiply(t1b, gen_t(params, 1));

            CanonicalElement core = multiply(g1, multiply(x1a, multiply(t1b, g1)));
            CanonicalElement lhs = multiply(x1, core);
            CanonicalElement rhs = multiply(core, x1) +
                                   qd * multiply(e1, multiply(multiply(x1, t1b), multiply(g1, x1a)) -
                                                         multiply(multiply(x1a, t1b), multiply(g1, x1)));
            if (!(lhs == rhs))
                failures.push_back(tag + ": X1 g1 X1^a t1^b g1 formula a=" + std::to_string(a) +
                                   " b=" + std::to_string(b));

            CanonicalElement core3 = multiply(g1inv, multiply(x1a, multiply(t1b, g1)));
            CanonicalElement lhs3 = multiply(x1, core3);
            CanonicalElement rhs3 = multiply(core3, x1) +
                                    qd * multiply(e1, multiply(multiply(x1, t1b), multiply(g1, x1a)) -
                                                          multiply(multiply(x_power(params, 1, a + 1), t1b), g1));
            if (!(lhs3 == rhs3))
                failures.push_back(tag + ": X1 g1^{-1} X1^a t1^b g1 formula a=" + std::to_string(a) +
                                   " b=" + std::to_string(b));
        }
    }
    return failures;
}

std::vector<std::string> associativity_failures(const ParamsPtr& params, int samples, uint64_t seed) {
    std::vector<std::string> failures;
    Rng rng(seed);
    auto random_monomial = [&]() {
        MonomialKey key;
        key.a.resize(static_cast<size_t>(params->n));
        key.b.resize(static_cast<size_t>(params->n));
        for (int j = 0; j < params->n; ++j) {
            key.a[static_cast<size_t>(j)] = params->affine() ? rng.range(-2, 2) : rng.range(0, params->m - 1);
            key.b[static_cast<size_t>(j)] = rng.range(0, params->d - 1);
        }
        std::vector<Permutation> perms = all_permutations(params->n);
        key.w = perms[static_cast<size_t>(rng.range(0, static_cast<int>(perms.size()) - 1))];
        return CanonicalElement::monomial(params, key, params->scalar_one());
    };
    for (int it = 0; it < samples; ++it) {
        CanonicalElement x = random_monomial(), y = random_monomial(), z = random_monomial();
        if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
            failures.push_back(instance_tag(*params) + ": associativity sample " + std::to_string(it));
    }
    return failures;
}

}  // namespace yoknot
