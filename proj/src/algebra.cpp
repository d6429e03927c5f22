#include "yoknot/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace yoknot {

RatFunc AlgebraParams::q_diff() const {
    return RatFunc(LaurentPoly::q_power(d, m, 1) - LaurentPoly::q_power(d, m, -1));
}

ParamsPtr make_params(int d, int m, int n) {
    if (d < 1 || n < 1 || m < 0) throw MathError("invalid algebra parameters");
    auto p = std::make_shared<AlgebraParams>();
    p->d = d;
    p->m = m;
    p->n = n;
    if (is_cyclotomic_m(m)) {
        // Expand (X - v_1)...(X - v_m); poly[j] tracks the coefficient of X^j.
        std::vector<LaurentPoly> poly(static_cast<size_t>(m) + 1, LaurentPoly::zero(d, m));
        poly[0] = LaurentPoly::one(d, m);
        for (int a = 1; a <= m; ++a) {
            LaurentPoly va = LaurentPoly::v_power(d, m, a, 1);
            for (int j = a; j >= 0; --j) {
                LaurentPoly next = j > 0 ? poly[static_cast<size_t>(j - 1)] : LaurentPoly::zero(d, m);
                poly[static_cast<size_t>(j)] = next - poly[static_cast<size_t>(j)] * va;
            }
        }
        p->gamma.assign(poly.begin(), poly.end() - 1);
    }
    return p;
}

CanonicalElement CanonicalElement::unit(ParamsPtr params) {
    MonomialKey key;
    key.a.assign(static_cast<size_t>(params->n), 0);
    key.b.assign(static_cast<size_t>(params->n), 0);
    key.w = Permutation::identity(params->n);
    RatFunc one = params->scalar_one();
    return monomial(std::move(params), std::move(key), std::move(one));
}

CanonicalElement CanonicalElement::monomial(ParamsPtr params, MonomialKey key, RatFunc coeff) {
    CanonicalElement out(std::move(params));
    out.add_term(key, coeff);
    return out;
}

void CanonicalElement::add_term(const MonomialKey& key, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CanonicalElement& CanonicalElement::operator+=(const CanonicalElement& o) {
    if (!params_) params_ = o.params_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

CanonicalElement& CanonicalElement::operator-=(const CanonicalElement& o) {
    if (!params_) params_ = o.params_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

CanonicalElement& CanonicalElement::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, t] : terms_) t *= c;
    return *this;
}

CanonicalElement CanonicalElement::operator-() const {
    CanonicalElement out(params_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

bool operator==(const CanonicalElement& x, const CanonicalElement& y) {
    return x.terms_ == y.terms_;
}

std::string CanonicalElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*[";
        for (size_t i = 0; i < k.a.size(); ++i) os << (i ? "," : "") << k.a[i];
        os << ";";
        for (size_t i = 0; i < k.b.size(); ++i) os << (i ? "," : "") << k.b[i];
        os << ";" << k.w.str() << "]";
        first = false;
    }
    return os.str();
}

namespace {

int mod_d(int x, int d) {
    int r = x % d;
    return r < 0 ? r + d : r;
}

MonomialKey base_key(const AlgebraParams& params) {
    MonomialKey key;
    key.a.assign(static_cast<size_t>(params.n), 0);
    key.b.assign(static_cast<size_t>(params.n), 0);
    key.w = Permutation::identity(params.n);
    return key;
}

// Appends `coeff * X^a t^b g_w` to `out`, reducing an out-of-range first slot
// of `a` through the cyclotomic relation when needed. Only slot `slot` may be
// out of range, by design of the callers.
void add_reduced(CanonicalElement& out, const AlgebraParams& params, MonomialKey key, size_t slot,
                 const RatFunc& coeff) {
    int a = key.a[slot];
    if (params.affine() || (a >= 0 && a < params.m)) {
        out.add_term(key, coeff);
        return;
    }
    std::vector<RatFunc> cs = x1_power_coeffs(params, a);
    for (int j = 0; j < params.m; ++j) {
        if (cs[static_cast<size_t>(j)].is_zero()) continue;
        MonomialKey k2 = key;
        k2.a[slot] = j;
        out.add_term(k2, coeff * cs[static_cast<size_t>(j)]);
    }
}

}  // namespace

std::vector<RatFunc> x1_power_coeffs(const AlgebraParams& params, long a) {
    if (params.affine()) throw MathError("X power reduction requires finite m");
    const int m = params.m;
    std::vector<RatFunc> cur(static_cast<size_t>(m), params.scalar_zero());
    if (a >= 0 && a < m) {
        cur[static_cast<size_t>(a)] = params.scalar_one();
        return cur;
    }
    cur[0] = params.scalar_one();
    if (a > 0) {
        // Multiply by X step by step; the overflow X^m folds back through
        // X^m = -sum_j gamma[j] X^j.
        std::vector<RatFunc> gammas;
        for (int j = 0; j < m; ++j) gammas.push_back(RatFunc(params.gamma[static_cast<size_t>(j)]));
        for (long step = 0; step < a; ++step) {
            std::vector<RatFunc> next(static_cast<size_t>(m), params.scalar_zero());
            const RatFunc& top = cur[static_cast<size_t>(m - 1)];
            for (int j = 0; j < m; ++j) {
                if (j > 0) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
                if (!top.is_zero()) next[static_cast<size_t>(j)] -= top * gammas[static_cast<size_t>(j)];
            }
            cur = std::move(next);
        }
    } else {
        // X^{-1} = -(1/gamma_0) (X^{m-1} + gamma_{m-1} X^{m-2} + ... + gamma_1)
        RatFunc g0_inv = RatFunc(params.gamma[0]).inverse();
        std::vector<RatFunc> inv_coeffs(static_cast<size_t>(m), params.scalar_zero());
        inv_coeffs[static_cast<size_t>(m - 1)] = -g0_inv;
        for (int j = 0; j + 1 < m; ++j)
            inv_coeffs[static_cast<size_t>(j)] = -(g0_inv * RatFunc(params.gamma[static_cast<size_t>(j + 1)]));
        for (long step = 0; step < -a; ++step) {
            std::vector<RatFunc> next(static_cast<size_t>(m), params.scalar_zero());
            const RatFunc& bottom = cur[0];
            for (int j = 0; j + 1 < m; ++j) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j + 1)];
            if (!bottom.is_zero())
                for (int j = 0; j < m; ++j) next[static_cast<size_t>(j)] += bottom * inv_coeffs[static_cast<size_t>(j)];
            cur = std::move(next);
        }
    }
    return cur;
}

CanonicalElement gen_t(const ParamsPtr& params, int j) {
    if (j < 1 || j > params->n) throw MathError("t index out of range");
    MonomialKey key = base_key(*params);
    key.b[static_cast<size_t>(j - 1)] = mod_d(1, params->d);
    return CanonicalElement::monomial(params, key, params->scalar_one());
}

CanonicalElement gen_g(const ParamsPtr& params, int i) {
    if (i < 1 || i >= params->n) throw MathError("g index out of range");
    MonomialKey key = base_key(*params);
    key.w = Permutation::transposition(params->n, i);
    return CanonicalElement::monomial(params, key, params->scalar_one());
}

CanonicalElement gen_x1(const ParamsPtr& params) {
    CanonicalElement out(params);
    MonomialKey key = base_key(*params);
    key.a[0] = 1;
    // For m = 1 the cyclotomic relation collapses X_1 to the scalar v_1.
    add_reduced(out, *params, std::move(key), 0, params->scalar_one());
    return out;
}

CanonicalElement e_idempotent(const ParamsPtr& params, int i) {
    if (i < 1 || i >= params->n) throw MathError("e index out of range");
    CanonicalElement out(params);
    RatFunc inv_d = params->scalar(Rational(1, params->d));
    for (int s = 0; s < params->d; ++s) {
        MonomialKey key = base_key(*params);
        key.b[static_cast<size_t>(i - 1)] = mod_d(s, params->d);
        key.b[static_cast<size_t>(i)] = mod_d(-s, params->d);
        out.add_term(key, inv_d);
    }
    return out;
}

CanonicalElement inverse_g(const ParamsPtr& params, int i) {
    return gen_g(params, i) - params->q_diff() * e_idempotent(params, i);
}

CanonicalElement inverse_t(const ParamsPtr& params, int j) {
    if (j < 1 || j > params->n) throw MathError("t index out of range");
    MonomialKey key = base_key(*params);
    key.b[static_cast<size_t>(j - 1)] = mod_d(-1, params->d);
    return CanonicalElement::monomial(params, key, params->scalar_one());
}

CanonicalElement inverse_x1(const ParamsPtr& params) {
    if (params->affine()) {
        MonomialKey key = base_key(*params);
        key.a[0] = -1;
        return CanonicalElement::monomial(params, key, params->scalar_one());
    }
    CanonicalElement out(params);
    std::vector<RatFunc> cs = x1_power_coeffs(*params, -1);
    for (int j = 0; j < params->m; ++j) {
        if (cs[static_cast<size_t>(j)].is_zero()) continue;
        MonomialKey key = base_key(*params);
        key.a[0] = j;
        out.add_term(key, cs[static_cast<size_t>(j)]);
    }
    return out;
}

CanonicalElement element_of_letter(const ParamsPtr& params, const Letter& letter) {
    switch (letter.kind) {
        case Letter::Kind::T: return gen_t(params, letter.index);
        case Letter::Kind::G: return gen_g(params, letter.index);
        case Letter::Kind::GInv: return inverse_g(params, letter.index);
        case Letter::Kind::X1: return gen_x1(params);
        case Letter::Kind::X1Inv: return inverse_x1(params);
    }
    throw MathError("unknown letter");
}

namespace {

void left_mul_t(int j, const CanonicalElement& x, CanonicalElement& out) {
    const AlgebraParams& params = *x.params();
    for (const auto& [key, c] : x.terms()) {
        MonomialKey k2 = key;
        k2.b[static_cast<size_t>(j - 1)] = mod_d(k2.b[static_cast<size_t>(j - 1)] + 1, params.d);
        out.add_term(k2, c);
    }
}

void left_mul_x1(bool inverse, const CanonicalElement& x, CanonicalElement& out) {
    const AlgebraParams& params = *x.params();
    // Exponent overflow at finite m reduces through (X1m); the a = -1 case
    // is exactly the inverse form (inv-X1).
    int delta = inverse ? -1 : 1;
    for (const auto& [key, c] : x.terms()) {
        MonomialKey k2 = key;
        k2.a[0] += delta;
        add_reduced(out, params, std::move(k2), 0, c);
    }
}

void left_mul_g(int i, const CanonicalElement& x, CanonicalElement& out) {
    const AlgebraParams& params = *x.params();
    const int d = params.d;
    RatFunc qd = params.q_diff();
    RatFunc qd_over_d = qd * params.scalar(Rational(1, d));
    const size_t pi = static_cast<size_t>(i - 1), pi1 = static_cast<size_t>(i);

    for (const auto& [key, c] : x.terms()) {
        const int alpha = key.a[pi];
        const int beta = key.a[pi1];

        // Main chunk: X^{a'} t^{b'} (g_{s_i w} [+ (q-q^{-1}) e_i g_w]) with the
        // i, i+1 slots of a and b swapped.
        MonomialKey main = key;
        std::swap(main.a[pi], main.a[pi1]);
        std::swap(main.b[pi], main.b[pi1]);
        Permutation siw = Permutation::transposition(params.n, i) * key.w;
        if (key.w.left_mul_lengthens(i)) {
            MonomialKey k2 = main;
            k2.w = siw;
            out.add_term(k2, c);
        } else {
            MonomialKey k2 = main;
            k2.w = siw;
            out.add_term(k2, c);
            for (int s = 0; s < d; ++s) {
                MonomialKey k3 = main;
                k3.b[pi] = mod_d(k3.b[pi] + s, d);
                k3.b[pi1] = mod_d(k3.b[pi1] - s, d);
                out.add_term(k3, c * qd_over_d);
            }
        }

        // Correction from g_i X_i^alpha X_{i+1}^beta (Lemma 2.1): a sum of
        // e_i-dressed monomials with no g_i, exponents staying between
        // min(alpha,beta) and max(alpha,beta).
        if (alpha == beta) continue;
        int sign = alpha > beta ? -1 : 1;
        RatFunc corr = qd_over_d * params.scalar(Rational(sign));
        std::vector<std::pair<int, int>> powers;
        if (alpha > beta) {
            for (int k = 1; k <= alpha - beta; ++k) powers.emplace_back(alpha - k, beta + k);
        } else {
            for (int k = 0; k <= beta - alpha - 1; ++k) powers.emplace_back(alpha + k, beta - k);
        }
        for (const auto& [ei, ei1] : powers) {
            for (int s = 0; s < d; ++s) {
                MonomialKey k2 = key;
                k2.a[pi] = ei;
                k2.a[pi1] = ei1;
                k2.b[pi] = mod_d(k2.b[pi] + s, d);
                k2.b[pi1] = mod_d(k2.b[pi1] - s, d);
                out.add_term(k2, c * corr);
            }
        }
    }
}

}  // namespace

CanonicalElement left_mul_letter(const Letter& letter, const CanonicalElement& x) {
    if (!x.params()) throw MathError("element has no parameters");
    CanonicalElement out(x.params());
    switch (letter.kind) {
        case Letter::Kind::T:
            left_mul_t(letter.index, x, out);
            break;
        case Letter::Kind::X1:
            left_mul_x1(false, x, out);
            break;
        case Letter::Kind::X1Inv:
            left_mul_x1(true, x, out);
            break;
        case Letter::Kind::G:
            left_mul_g(letter.index, x, out);
            break;
        case Letter::Kind::GInv: {
            // g_i^{-1} = g_i - (q-q^{-1}) e_i
            left_mul_g(letter.index, x, out);
            const AlgebraParams& params = *x.params();
            RatFunc coeff = -(params.q_diff() * params.scalar(Rational(1, params.d)));
            const size_t pi = static_cast<size_t>(letter.index - 1), pi1 = static_cast<size_t>(letter.index);
            for (const auto& [key, c] : x.terms()) {
                for (int s = 0; s < params.d; ++s) {
                    MonomialKey k2 = key;
                    k2.b[pi] = mod_d(k2.b[pi] + s, params.d);
                    k2.b[pi1] = mod_d(k2.b[pi1] - s, params.d);
                    out.add_term(k2, c * coeff);
                }
            }
            break;
        }
    }
    return out;
}

Word monomial_letters(const AlgebraParams& params, const MonomialKey& key) {
    Word word;
    for (int j = 1; j <= params.n; ++j) {
        int a = key.a[static_cast<size_t>(j - 1)];
        bool inv = a < 0;
        for (int rep = 0; rep < (inv ? -a : a); ++rep) {
            for (int i = j - 1; i >= 1; --i) word.push_back(inv ? Letter::g_inv(i) : Letter::g(i));
            word.push_back(inv ? Letter::x1_inv() : Letter::x1());
            for (int i = 1; i <= j - 1; ++i) word.push_back(inv ? Letter::g_inv(i) : Letter::g(i));
        }
    }
    for (int j = 1; j <= params.n; ++j)
        for (int rep = 0; rep < key.b[static_cast<size_t>(j - 1)]; ++rep) word.push_back(Letter::t(j));
    for (int i : key.w.reduced_word()) word.push_back(Letter::g(i));
    return word;
}

CanonicalElement word_to_element(const ParamsPtr& params, const Word& word) {
    CanonicalElement acc = CanonicalElement::unit(params);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mul_letter(*it, acc);
    return acc;
}

CanonicalElement multiply(const CanonicalElement& x, const CanonicalElement& y) {
    if (!x.params() || !y.params()) throw MathError("element has no parameters");
    const AlgebraParams& params = *x.params();
    if (params.d != y.params()->d || params.m != y.params()->m || params.n != y.params()->n)
        throw MathError("algebra parameter mismatch");
    CanonicalElement out(x.params());
    for (const auto& [key, c] : x.terms()) {
        Word word = monomial_letters(params, key);
        CanonicalElement acc = y;
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mul_letter(*it, acc);
        acc *= c;
        out += acc;
    }
    return out;
}

std::vector<CanonicalElement> jm_x(const ParamsPtr& params) {
    std::vector<CanonicalElement> xs;
    xs.push_back(gen_x1(params));
    for (int i = 1; i < params->n; ++i) {
        CanonicalElement gi = gen_g(params, i);
        xs.push_back(multiply(gi, multiply(xs.back(), gi)));
    }
    return xs;
}

std::vector<CanonicalElement> jm_x_tilde(const ParamsPtr& params) {
    std::vector<CanonicalElement> xs;
    xs.push_back(gen_x1(params));
    for (int i = 1; i < params->n; ++i) {
        CanonicalElement gi = gen_g(params, i);
        xs.push_back(multiply(inverse_g(params, i), multiply(xs.back(), gi)));
    }
    return xs;
}

CanonicalElement eta_involution(const CanonicalElement& x) {
    const ParamsPtr& params = x.params();
    CanonicalElement out(params);
    for (const auto& [key, c] : x.terms()) {
        Word word = monomial_letters(*params, key);
        Word inverted;
        for (const Letter& l : word) {
            switch (l.kind) {
                case Letter::Kind::T:
                    for (int rep = 0; rep < params->d - 1; ++rep) inverted.push_back(l);
                    break;
                case Letter::Kind::G: inverted.push_back(Letter::g_inv(l.index)); break;
                case Letter::Kind::GInv: inverted.push_back(Letter::g(l.index)); break;
                case Letter::Kind::X1: inverted.push_back(Letter::x1_inv()); break;
                case Letter::Kind::X1Inv: inverted.push_back(Letter::x1()); break;
            }
        }
        out += c.inverted_variables() * word_to_element(params, inverted);
    }
    return out;
}

CanonicalElement project_pi_H(const CanonicalElement& x) {
    const ParamsPtr& src = x.params();
    ParamsPtr target = make_params(1, src->m, src->n);
    CanonicalElement out(target);
    for (const auto& [key, c] : x.terms()) {
        MonomialKey k2 = key;
        std::fill(k2.b.begin(), k2.b.end(), 0);
        RatFunc coeff(c.num().lifted_to(1), c.den().lifted_to(1));
        out.add_term(k2, coeff);
    }
    return out;
}

CanonicalElement project_pi_Y(const CanonicalElement& x) {
    const ParamsPtr& params = x.params();
    CanonicalElement out(params);
    for (const auto& [key, c] : x.terms()) {
        Word word = monomial_letters(*params, key);
        Word stripped;
        int net_x = 0;
        for (const Letter& l : word) {
            if (l.kind == Letter::Kind::X1)
                ++net_x;
            else if (l.kind == Letter::Kind::X1Inv)
                --net_x;
            else
                stripped.push_back(l);
        }
        RatFunc scale = params->affine() ? params->scalar_one()
                                         : RatFunc::v_power(params->d, params->m, 1, net_x);
        out += (c * scale) * word_to_element(params, stripped);
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<size_t>(j)] = j + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<MonomialKey> all_canonical_keys(const AlgebraParams& params) {
    if (params.affine()) throw MathError("canonical key enumeration requires finite m");
    const int n = params.n;
    std::vector<MonomialKey> out;
    std::vector<Permutation> perms = all_permutations(n);
    std::vector<int> a(static_cast<size_t>(n), 0), b(static_cast<size_t>(n), 0);
    auto next_vec = [](std::vector<int>& v, int bound) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (++v[i] < bound) return true;
            v[i] = 0;
        }
        return false;
    };
    do {
        std::fill(b.begin(), b.end(), 0);
        do {
            for (const Permutation& w : perms) {
                MonomialKey key;
                key.a = a;
                key.b = b;
                key.w = w;
                out.push_back(std::move(key));
            }
        } while (next_vec(b, params.d));
    } while (next_vec(a, params.m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace yoknot
