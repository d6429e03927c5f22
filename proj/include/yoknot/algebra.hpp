#pragma once

#include <memory>
#include <map>
#include <string>
#include <vector>

#include "yoknot/permutation.hpp"
#include "yoknot/ratfunc.hpp"

namespace yoknot {

// Instance data for Y(d,m,n). For finite m, gamma[j] is the coefficient of
// X^j in (X - v_1)...(X - v_m), so X_1^m = -sum_j gamma[j] X_1^j.
struct AlgebraParams {
    int d;
    int m;  // kAffineM encodes m = infinity
    int n;
    std::vector<LaurentPoly> gamma;

    bool affine() const { return m == kAffineM; }
    RatFunc scalar(const Rational& r) const { return RatFunc::constant(d, m, r); }
    RatFunc scalar_one() const { return RatFunc::one(d, m); }
    RatFunc scalar_zero() const { return RatFunc::zero(d, m); }
    // q - q^{-1}
    RatFunc q_diff() const;
};

using ParamsPtr = std::shared_ptr<const AlgebraParams>;

ParamsPtr make_params(int d, int m, int n);

// Generator letters for word rewriting. X letters always refer to X_1.
struct Letter {
    enum class Kind { T, G, GInv, X1, X1Inv };
    Kind kind;
    int index;  // 1 <= j <= n for T; 1 <= i <= n-1 for G/GInv; 0 for X letters

    static Letter t(int j) { return {Kind::T, j}; }
    static Letter g(int i) { return {Kind::G, i}; }
    static Letter g_inv(int i) { return {Kind::GInv, i}; }
    static Letter x1() { return {Kind::X1, 0}; }
    static Letter x1_inv() { return {Kind::X1Inv, 0}; }
};

using Word = std::vector<Letter>;

// Key of a canonical basis monomial X_1^{a_1}..X_n^{a_n} t_1^{b_1}..t_n^{b_n} g_w.
struct MonomialKey {
    std::vector<int> a;
    std::vector<int> b;
    Permutation w;

    friend bool operator<(const MonomialKey& x, const MonomialKey& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.w < y.w;
    }
    friend bool operator==(const MonomialKey& x, const MonomialKey& y) {
        return x.a == y.a && x.b == y.b && x.w == y.w;
    }
};

// Element of Y(d,m,n) on the canonical basis: finitely supported map from
// monomial keys to coefficients, zero coefficients pruned.
class CanonicalElement {
  public:
    using TermMap = std::map<MonomialKey, RatFunc>;

    CanonicalElement() = default;
    explicit CanonicalElement(ParamsPtr params) : params_(std::move(params)) {}

    static CanonicalElement zero(ParamsPtr params) { return CanonicalElement(std::move(params)); }
    static CanonicalElement unit(ParamsPtr params);
    static CanonicalElement monomial(ParamsPtr params, MonomialKey key, RatFunc coeff);

    const ParamsPtr& params() const { return params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const MonomialKey& key, const RatFunc& coeff);

    CanonicalElement& operator+=(const CanonicalElement& o);
    CanonicalElement& operator-=(const CanonicalElement& o);
    CanonicalElement& operator*=(const RatFunc& c);
    CanonicalElement operator-() const;
    friend CanonicalElement operator+(CanonicalElement x, const CanonicalElement& y) { return x += y; }
    friend CanonicalElement operator-(CanonicalElement x, const CanonicalElement& y) { return x -= y; }
    friend CanonicalElement operator*(CanonicalElement x, const RatFunc& c) { return x *= c; }
    friend CanonicalElement operator*(const RatFunc& c, CanonicalElement x) { return x *= c; }

    friend bool operator==(const CanonicalElement& x, const CanonicalElement& y);
    friend bool operator!=(const CanonicalElement& x, const CanonicalElement& y) { return !(x == y); }

    std::string str() const;

  private:
    ParamsPtr params_;
    TermMap terms_;
};

// Generators as single monomials.
CanonicalElement gen_t(const ParamsPtr& params, int j);
CanonicalElement gen_g(const ParamsPtr& params, int i);
CanonicalElement gen_x1(const ParamsPtr& params);

// e_i = (1/d) sum_s t_i^s t_{i+1}^{-s}
CanonicalElement e_idempotent(const ParamsPtr& params, int i);

// Two-sided inverses: g_i^{-1} = g_i - (q-q^{-1}) e_i; t_j^{-1} = t_j^{d-1};
// X_1^{-1} via the cyclotomic relation for finite m, a plain monomial otherwise.
CanonicalElement inverse_g(const ParamsPtr& params, int i);
CanonicalElement inverse_t(const ParamsPtr& params, int j);
CanonicalElement inverse_x1(const ParamsPtr& params);

CanonicalElement element_of_letter(const ParamsPtr& params, const Letter& letter);

// Left product by one generator letter, rewritten back to the canonical basis.
CanonicalElement left_mul_letter(const Letter& letter, const CanonicalElement& x);

CanonicalElement multiply(const CanonicalElement& x, const CanonicalElement& y);

// Letter word of a canonical monomial: X_j expands through X_j = g_{j-1}..g_1 X_1 g_1..g_{j-1}.
Word monomial_letters(const AlgebraParams& params, const MonomialKey& key);

CanonicalElement word_to_element(const ParamsPtr& params, const Word& word);

// Coefficients of X_1^a on the basis {X_1^j : j in E_m} (finite m).
std::vector<RatFunc> x1_power_coeffs(const AlgebraParams& params, long a);

// Jucys-Murphy families: X_{i+1} = g_i X_i g_i and tilde X_{i+1} = g_i^{-1} tilde X_i g_i.
std::vector<CanonicalElement> jm_x(const ParamsPtr& params);
std::vector<CanonicalElement> jm_x_tilde(const ParamsPtr& params);

// Involution eta: generators to their inverses, q -> q^{-1}, v_a -> v_a^{-1}.
CanonicalElement eta_involution(const CanonicalElement& x);

// Quotient over t_j = 1 (lands in the d=1 instance). Coefficients must be
// free of zeta_d, which holds for anything generated from rational input.
CanonicalElement project_pi_H(const CanonicalElement& x);

// Substitutes X_1 -> v_1 (finite m) or X_1 -> 1 (affine); image lies in the
// Yokonuma-Hecke subalgebra generated by the t's and g's.
CanonicalElement project_pi_Y(const CanonicalElement& x);

// All (dm)^n n! canonical keys of a finite-m instance, in key order.
std::vector<MonomialKey> all_canonical_keys(const AlgebraParams& params);

std::vector<Permutation> all_permutations(int n);

}  // namespace yoknot
