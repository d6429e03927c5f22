#include "yoknot/nested.hpp"

namespace yoknot {

namespace {

int mod_d(int x, int d) {
    int r = x % d;
    return r < 0 ? r + d : r;
}

// Letters of W^{(k)}_{J,a,b} itself (not of the basis element it keys).
Word w_prefix_word(int k, int J, int a, int b_mod_d) {
    Word word;
    for (int i = J; i >= 1; --i) word.push_back(Letter::g_inv(i));
    for (int r = 0; r < (a < 0 ? -a : a); ++r) word.push_back(a < 0 ? Letter::x1_inv() : Letter::x1());
    for (int r = 0; r < b_mod_d; ++r) word.push_back(Letter::t(1));
    for (int i = 1; i <= k - 1; ++i) word.push_back(Letter::g(i));
    return word;
}

}  // namespace

NestedElement NestedElement::scalar(RatFunc value) {
    NestedElement out(0);
    out.scalar_ = std::move(value);
    return out;
}

NestedElement NestedElement::zero(const AlgebraParams& params, int level) {
    if (level == 0) return scalar(params.scalar_zero());
    return NestedElement(level);
}

NestedElement NestedElement::identity(const AlgebraParams& params, int level) {
    if (level == 0) return scalar(params.scalar_one());
    NestedElement out(level);
    out.sub_.emplace(NestedKey{level - 1, 0, 0}, identity(params, level - 1));
    return out;
}

const RatFunc& NestedElement::scalar_value() const {
    if (level_ != 0) throw MathError("scalar_value on a non-scalar nested element");
    return scalar_;
}

void NestedElement::add_sub(const AlgebraParams& params, const NestedKey& key, NestedElement piece) {
    if (level_ == 0) throw MathError("cannot add keyed pieces to a scalar");
    if (piece.level() != level_ - 1) throw MathError("nested level mismatch");
    if (piece.is_zero()) return;
    if (key.J < 0 || key.J > level_ - 1) throw MathError("nested key J out of range");
    int b = mod_d(key.b, params.d);
    if (!params.affine() && (key.a < 0 || key.a >= params.m)) {
        // Out-of-range X exponent in the key: W^{(k)}_{J,a,b} is linear in
        // X_1^a, so reduce a through the cyclotomic relation.
        std::vector<RatFunc> cs = x1_power_coeffs(params, key.a);
        for (int j = 0; j < params.m; ++j) {
            if (cs[static_cast<size_t>(j)].is_zero()) continue;
            add_sub(params, NestedKey{key.J, j, b}, piece * cs[static_cast<size_t>(j)]);
        }
        return;
    }
    NestedKey k2{key.J, key.a, b};
    auto it = sub_.find(k2);
    if (it == sub_.end()) {
        sub_.emplace(k2, std::move(piece));
    } else {
        it->second += piece;
        if (it->second.is_zero()) sub_.erase(it);
    }
}

NestedElement& NestedElement::operator+=(const NestedElement& o) {
    if (level_ != o.level_) throw MathError("nested level mismatch in addition");
    if (level_ == 0) {
        scalar_ += o.scalar_;
        return *this;
    }
    for (const auto& [k, piece] : o.sub_) {
        auto it = sub_.find(k);
        if (it == sub_.end()) {
            sub_.emplace(k, piece);
        } else {
            it->second += piece;
            if (it->second.is_zero()) sub_.erase(it);
        }
    }
    return *this;
}

NestedElement& NestedElement::operator*=(const RatFunc& c) {
    if (level_ == 0) {
        scalar_ *= c;
        return *this;
    }
    if (c.is_zero()) {
        sub_.clear();
        return *this;
    }
    for (auto& [k, piece] : sub_) piece *= c;
    return *this;
}

bool operator==(const NestedElement& x, const NestedElement& y) {
    if (x.level_ != y.level_) return false;
    if (x.level_ == 0) return x.scalar_ == y.scalar_;
    return x.sub_ == y.sub_;
}

NestedElement nested_apply_word(const AlgebraParams& params, const Word& word, NestedElement x) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = nested_left_mul(params, *it, x);
    return x;
}

NestedElement nested_left_mul(const AlgebraParams& params, const Letter& letter, const NestedElement& x) {
    const int k = x.level();
    if (k == 0) throw MathError("cannot left-multiply a scalar nested element");
    const int d = params.d;
    NestedElement out = NestedElement::zero(params, k);
    RatFunc qd_over_d = params.q_diff() * params.scalar(Rational(1, d));

    switch (letter.kind) {
        case Letter::Kind::T: {
            const int l = letter.index;
            if (l < 1 || l > k) throw MathError("t index out of range at this level");
            for (const auto& [key, w] : x.sub()) {
                if (l <= key.J) {
                    out.add_sub(params, key, nested_left_mul(params, Letter::t(l), w));
                } else if (l == key.J + 1) {
                    out.add_sub(params, NestedKey{key.J, key.a, key.b + 1}, w);
                } else {
                    out.add_sub(params, key, nested_left_mul(params, Letter::t(l - 1), w));
                }
            }
            return out;
        }
        case Letter::Kind::G: {
            const int i = letter.index;
            if (i < 1 || i > k - 1) throw MathError("g index out of range at this level");
            for (const auto& [key, w] : x.sub()) {
                if (i < key.J) {
                    out.add_sub(params, key, nested_left_mul(params, Letter::g(i), w));
                } else if (i == key.J) {
                    out.add_sub(params, NestedKey{key.J - 1, key.a, key.b}, w);
                } else if (i == key.J + 1) {
                    out.add_sub(params, NestedKey{key.J + 1, key.a, key.b}, w);
                    for (int s = 0; s < d; ++s) {
                        Word ts(static_cast<size_t>(s), Letter::t(key.J + 1));
                        out.add_sub(params, NestedKey{key.J, key.a, key.b - s},
                                    nested_apply_word(params, ts, w) * qd_over_d);
                    }
                } else {
                    out.add_sub(params, key, nested_left_mul(params, Letter::g(i - 1), w));
                }
            }
            return out;
        }
        case Letter::Kind::GInv: {
            // g_i^{-1} = g_i - (q-q^{-1}) e_i with e_i expanded into t letters.
            const int i = letter.index;
            if (i < 1 || i > k - 1) throw MathError("g index out of range at this level");
            out = nested_left_mul(params, Letter::g(i), x);
            RatFunc coeff = -qd_over_d;
            for (int s = 0; s < d; ++s) {
                Word ts;
                for (int r = 0; r < s; ++r) ts.push_back(Letter::t(i));
                for (int r = 0; r < mod_d(-s, d); ++r) ts.push_back(Letter::t(i + 1));
                out += nested_apply_word(params, ts, x) * coeff;
            }
            return out;
        }
        case Letter::Kind::X1: {
            for (const auto& [key, w] : x.sub()) {
                if (key.J == 0) {
                    out.add_sub(params, NestedKey{0, key.a + 1, key.b}, w);
                    continue;
                }
                out.add_sub(params, key, nested_left_mul(params, Letter::x1(), w));
                for (int s = 0; s < d; ++s) {
                    Word tail;  // g_{J-1}^{-1}..g_1^{-1} t_1^s X_1^a
                    for (int i = key.J - 1; i >= 1; --i) tail.push_back(Letter::g_inv(i));
                    for (int r = 0; r < s; ++r) tail.push_back(Letter::t(1));
                    Word tail_no_x = tail;
                    for (int r = 0; r < (key.a < 0 ? -key.a : key.a); ++r)
                        tail.push_back(key.a < 0 ? Letter::x1_inv() : Letter::x1());
                    out.add_sub(params, NestedKey{0, 1, key.b - s},
                                nested_apply_word(params, tail, w) * qd_over_d);
                    out.add_sub(params, NestedKey{0, key.a + 1, key.b - s},
                                nested_apply_word(params, tail_no_x, w) * (-qd_over_d));
                }
            }
            return out;
        }
        case Letter::Kind::X1Inv: {
            if (!params.affine()) {
                // (inv-X1): X_1^{-1} is a polynomial in X_1.
                std::vector<RatFunc> cs = x1_power_coeffs(params, -1);
                for (int j = 0; j < params.m; ++j) {
                    if (cs[static_cast<size_t>(j)].is_zero()) continue;
                    NestedElement acc = x;
                    for (int r = 0; r < j; ++r) acc = nested_left_mul(params, Letter::x1(), acc);
                    out += acc * cs[static_cast<size_t>(j)];
                }
                return out;
            }
            for (const auto& [key, w] : x.sub()) {
                if (key.J == 0) {
                    out.add_sub(params, NestedKey{0, key.a - 1, key.b}, w);
                    continue;
                }
                out.add_sub(params, key, nested_left_mul(params, Letter::x1_inv(), w));
                for (int s = 0; s < d; ++s) {
                    Word tail;  // g_{J-1}^{-1}..g_1^{-1} t_1^s X_1^{a-1}
                    for (int i = key.J - 1; i >= 1; --i) tail.push_back(Letter::g_inv(i));
                    for (int r = 0; r < s; ++r) tail.push_back(Letter::t(1));
                    Word tail_xinv = tail;
                    int am1 = key.a - 1;
                    for (int r = 0; r < (am1 < 0 ? -am1 : am1); ++r)
                        tail.push_back(am1 < 0 ? Letter::x1_inv() : Letter::x1());
                    tail_xinv.push_back(Letter::x1_inv());
                    out.add_sub(params, NestedKey{0, 0, key.b - s},
                                nested_apply_word(params, tail, w) * (-qd_over_d));
                    out.add_sub(params, NestedKey{0, key.a, key.b - s},
                                nested_apply_word(params, tail_xinv, w) * qd_over_d);
                }
            }
            return out;
        }
    }
    throw MathError("unknown letter");
}

NestedElement word_to_nested(const ParamsPtr& params, const Word& word) {
    return nested_apply_word(*params, word, NestedElement::identity(*params, params->n));
}

CanonicalElement nested_to_canonical(const ParamsPtr& params, const NestedElement& x) {
    if (x.level() == 0) return x.scalar_value() * CanonicalElement::unit(params);
    CanonicalElement out = CanonicalElement::zero(params);
    for (const auto& [key, w] : x.sub()) {
        CanonicalElement prefix = word_to_element(params, w_prefix_word(x.level(), key.J, key.a, key.b));
        out += multiply(prefix, nested_to_canonical(params, w));
    }
    return out;
}

TraceParams TraceParams::from_table(ParamsPtr params, RatFunc z, Table table) {
    TraceParams tp;
    tp.params_ = std::move(params);
    tp.z_ = std::move(z);
    tp.table_ = std::move(table);
    if (!tp.params_->affine()) {
        for (int a = 0; a < tp.params_->m; ++a)
            for (int b = 0; b < tp.params_->d; ++b)
                if (!tp.table_.count({a, b}))
                    throw MathError("trace parameter table is missing x(" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
    auto it = tp.table_.find({0, 0});
    if (it == tp.table_.end() || !(it->second == tp.params_->scalar_one()))
        throw MathError("Markov trace requires x(0,0) = 1");
    return tp;
}

TraceParams TraceParams::with_generator(ParamsPtr params, RatFunc z, Generator gen) {
    TraceParams tp;
    tp.params_ = std::move(params);
    tp.z_ = std::move(z);
    tp.generator_ = std::move(gen);
    if (!(tp.x_value(0, 0) == tp.params_->scalar_one()))
        throw MathError("Markov trace requires x(0,0) = 1");
    return tp;
}

RatFunc TraceParams::x_value(long a, long b) const {
    const AlgebraParams& p = *params_;
    int bm = static_cast<int>(((b % p.d) + p.d) % p.d);
    if (!p.affine() && (a < 0 || a >= p.m)) {
        std::vector<RatFunc> cs = x1_power_coeffs(p, a);
        RatFunc acc = p.scalar_zero();
        for (int j = 0; j < p.m; ++j)
            if (!cs[static_cast<size_t>(j)].is_zero()) acc += cs[static_cast<size_t>(j)] * x_value(j, bm);
        return acc;
    }
    auto it = table_.find({static_cast<int>(a), bm});
    if (it != table_.end()) return it->second;
    if (generator_) return generator_(static_cast<int>(a), bm);
    throw MathError("missing trace parameter x(" + std::to_string(a) + "," + std::to_string(bm) + ")");
}

RatFunc TraceParams::trace_of_e() const {
    const AlgebraParams& p = *params_;
    RatFunc acc = p.scalar_zero();
    for (int s = 0; s < p.d; ++s) acc += x_value(0, -s) * x_value(0, s);
    return acc * p.scalar(Rational(1, p.d));
}

NestedElement relative_trace(const TraceParams& tp, const NestedElement& x) {
    const AlgebraParams& params = *tp.params();
    const int k = x.level();
    if (k < 1) throw MathError("relative trace needs level >= 1");
    NestedElement out = NestedElement::zero(params, k - 1);
    for (const auto& [key, w] : x.sub()) {
        if (key.J == k - 1) {
            out += tp.x_value(key.a, key.b) * w;
        } else {
            // tr_k(W^{(k)}_{J,a,b} w) = z * W^{(k-1)}_{J,a,b} * w
            NestedElement prod = nested_apply_word(params, w_prefix_word(k - 1, key.J, key.a, key.b), w);
            out += tp.z() * prod;
        }
    }
    return out;
}

RatFunc markov_trace(const TraceParams& tp, NestedElement x) {
    while (x.level() > 0) x = relative_trace(tp, x);
    return x.scalar_value();
}

RatFunc zero_trace_canonical(const CanonicalElement& x) {
    if (!x.params()) throw MathError("element has no parameters");
    MonomialKey unit;
    unit.a.assign(static_cast<size_t>(x.params()->n), 0);
    unit.b.assign(static_cast<size_t>(x.params()->n), 0);
    unit.w = Permutation::identity(x.params()->n);
    auto it = x.terms().find(unit);
    return it == x.terms().end() ? x.params()->scalar_zero() : it->second;
}

TraceParams zero_trace_params(const ParamsPtr& params) {
    TraceParams::Table table;
    for (int a = 0; a < (params->affine() ? 1 : params->m); ++a)
        for (int b = 0; b < params->d; ++b)
            table[{a, b}] = (a == 0 && b == 0) ? params->scalar_one() : params->scalar_zero();
    if (params->affine())
        return TraceParams::with_generator(params, params->scalar_zero(), [params](int a, int b) {
            return (a == 0 && b == 0) ? params->scalar_one() : params->scalar_zero();
        });
    return TraceParams::from_table(params, params->scalar_zero(), std::move(table));
}

}  // namespace yoknot
