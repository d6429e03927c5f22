#pragma once

#include <functional>
#include <map>
#include <utility>

#include "yoknot/algebra.hpp"

namespace yoknot {

// Key of an inductive-basis prefix W^{(k)}_{J,a,b} = g_J^{-1}..g_1^{-1} X_1^a t_1^b g_1..g_{k-1}.
struct NestedKey {
    int J;
    int a;
    int b;

    friend bool operator<(const NestedKey& x, const NestedKey& y) {
        if (x.J != y.J) return x.J < y.J;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    friend bool operator==(const NestedKey& x, const NestedKey& y) {
        return x.J == y.J && x.a == y.a && x.b == y.b;
    }
};

// Element of Y(d,m,k) in the inductive basis: at level k >= 1 a finitely
// supported sum of W^{(k)}_{J,a,b} * (level k-1 element); at level 0 a scalar.
class NestedElement {
  public:
    using SubMap = std::map<NestedKey, NestedElement>;

    static NestedElement scalar(RatFunc value);
    static NestedElement zero(const AlgebraParams& params, int level);
    // The unit: W^{(k)}_{k-1,0,0} = 1 at every level.
    static NestedElement identity(const AlgebraParams& params, int level);

    int level() const { return level_; }
    bool is_zero() const { return level_ == 0 ? scalar_.is_zero() : sub_.empty(); }
    const RatFunc& scalar_value() const;
    const SubMap& sub() const { return sub_; }

    void add_sub(const AlgebraParams& params, const NestedKey& key, NestedElement piece);
    NestedElement& operator+=(const NestedElement& o);
    NestedElement& operator*=(const RatFunc& c);
    friend NestedElement operator+(NestedElement x, const NestedElement& y) { return x += y; }
    friend NestedElement operator*(NestedElement x, const RatFunc& c) { return x *= c; }
    friend NestedElement operator*(const RatFunc& c, NestedElement x) { return x *= c; }

    friend bool operator==(const NestedElement& x, const NestedElement& y);
    friend bool operator!=(const NestedElement& x, const NestedElement& y) { return !(x == y); }

  private:
    explicit NestedElement(int level) : level_(level), scalar_() {}

    int level_ = 0;
    RatFunc scalar_;
    SubMap sub_;
};

// Left product by one generator letter valid at the element's level.
NestedElement nested_left_mul(const AlgebraParams& params, const Letter& letter, const NestedElement& x);

// Applies a word by left multiplication (rightmost letter first).
NestedElement nested_apply_word(const AlgebraParams& params, const Word& word, NestedElement x);

NestedElement word_to_nested(const ParamsPtr& params, const Word& word);

CanonicalElement nested_to_canonical(const ParamsPtr& params, const NestedElement& x);

// Markov trace parameters: z and the family x_{a,b} with x_{0,0} = 1,
// periodic in b mod d. For finite m the table covers E_m x {0..d-1} and
// out-of-range exponents reduce through the cyclotomic relation; for the
// affine case values come from the table or the optional generator, and a
// missing entry is an error.
class TraceParams {
  public:
    using Table = std::map<std::pair<int, int>, RatFunc>;
    using Generator = std::function<RatFunc(int, int)>;

    static TraceParams from_table(ParamsPtr params, RatFunc z, Table table);
    static TraceParams with_generator(ParamsPtr params, RatFunc z, Generator gen);

    const ParamsPtr& params() const { return params_; }
    const RatFunc& z() const { return z_; }
    RatFunc x_value(long a, long b) const;
    // E = tr(e_i) = (1/d) sum_s x_{0,-s} x_{0,s}
    RatFunc trace_of_e() const;

  private:
    TraceParams() = default;

    ParamsPtr params_;
    RatFunc z_;
    Table table_;
    Generator generator_;
};

// tr_k : level k -> level k-1, per (RT1)/(RT2).
NestedElement relative_trace(const TraceParams& tp, const NestedElement& x);

// tau = tr_1 . tr_2 ... tr_k on a level-k element.
RatFunc markov_trace(const TraceParams& tp, NestedElement x);

// The zero-parameter trace on the canonical basis: the coefficient of the
// unit monomial.
RatFunc zero_trace_canonical(const CanonicalElement& x);

// TraceParams for z = 0, x_{a,b} = delta_{a,0} delta_{b,0} (finite m).
TraceParams zero_trace_params(const ParamsPtr& params);

}  // namespace yoknot
