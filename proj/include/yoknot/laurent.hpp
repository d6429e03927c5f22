#pragma once

#include <map>
#include <string>
#include <vector>

#include "yoknot/cyclotomic.hpp"

namespace yoknot {

// Generic evaluation point: q and (when m is finite) v_1..v_m as exact
// rationals.
struct SpecPoint {
    Rational q;
    std::vector<Rational> v;

    // Distinct small primes, shifted by `attempt` for retry-on-pole:
    // q = p_attempt, v_a = p_{attempt+a}.
    static SpecPoint generic(int m, int attempt = 0);
};

// Sparse Laurent polynomial in q, v_1..v_m over Q(zeta_d). For the affine
// case (m = kAffineM) the exponent vectors hold only the q exponent.
// Invariant: no stored coefficient is zero; exponent keys are lex-ordered
// by std::map, which fixes the serialization order.
class LaurentPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, CycloNum>;

    LaurentPoly() : d_(1), m_(kAffineM) {}
    LaurentPoly(int d, int m) : d_(d), m_(m) {}

    static LaurentPoly zero(int d, int m) { return LaurentPoly(d, m); }
    static LaurentPoly one(int d, int m) { return constant(d, m, Rational(1)); }
    static LaurentPoly constant(int d, int m, const Rational& r);
    static LaurentPoly constant(int d, int m, const CycloNum& c);
    static LaurentPoly q_power(int d, int m, int e);
    // v_a^e, a in 1..m (finite m only).
    static LaurentPoly v_power(int d, int m, int a, int e);
    static LaurentPoly monomial(int d, int m, Exponents expo, CycloNum coeff);

    int d() const { return d_; }
    int m() const { return m_; }
    bool affine() const { return m_ == kAffineM; }
    int nvars() const { return affine() ? 1 : 1 + m_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycloNum constant_value() const;  // requires is_constant
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const CycloNum& c);
    LaurentPoly& operator*=(const Rational& r);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const CycloNum& c) { return a *= c; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& r) { return a *= r; }

    LaurentPoly pow(int e) const;  // e >= 0, or any e for single-term polys

    // q -> q^{-1}, v_a -> v_a^{-1} (all exponents negated).
    LaurentPoly inverted_variables() const;

    // Componentwise minimum of exponent vectors (the monomial content).
    Exponents min_exponents() const;
    // Multiply by the monomial with exponent vector `delta`.
    LaurentPoly shifted(const Exponents& delta) const;
    const CycloNum& leading_coeff() const;  // coeff of the lex-largest term

    // Promote a d=1 (rational-coefficient) polynomial into Q(zeta_new_d).
    LaurentPoly lifted_to(int new_d) const;

    CycloNum specialize(const SpecPoint& pt) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Deterministic text form, terms in lex exponent order.
    std::string str() const;

    void add_term(const Exponents& expo, const CycloNum& coeff);
    void check_context(const LaurentPoly& o) const;

  private:
    int d_, m_;
    TermMap terms_;
};

}  // namespace yoknot
