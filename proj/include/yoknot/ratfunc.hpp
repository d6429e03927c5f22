#pragma once

#include "yoknot/laurent.hpp"

namespace yoknot {

// Fraction of Laurent polynomials. Normalization keeps the denominator with
// zero monomial content and lex-leading coefficient 1; no polynomial gcd is
// taken, so equality goes through cross-multiplication.
class RatFunc {
  public:
    RatFunc() : num_(), den_(LaurentPoly::one(1, kAffineM)) {}
    explicit RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one(num_.d(), num_.m())) { normalize(); }
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc zero(int d, int m) { return RatFunc(LaurentPoly::zero(d, m)); }
    static RatFunc one(int d, int m) { return RatFunc(LaurentPoly::one(d, m)); }
    static RatFunc constant(int d, int m, const Rational& r) { return RatFunc(LaurentPoly::constant(d, m, r)); }
    static RatFunc constant(int d, int m, const CycloNum& c) { return RatFunc(LaurentPoly::constant(d, m, c)); }
    static RatFunc q_power(int d, int m, int e) { return RatFunc(LaurentPoly::q_power(d, m, e)); }
    static RatFunc v_power(int d, int m, int a, int e) { return RatFunc(LaurentPoly::v_power(d, m, a, e)); }

    int d() const { return num_.d(); }
    int m() const { return num_.m(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    RatFunc inverted_variables() const;
    RatFunc lifted_to(int new_d) const;

    // Exact evaluation; throws MathError("specialization pole") when the
    // denominator vanishes at the point.
    CycloNum specialize(const SpecPoint& pt) const;

    // a/b == c/d  iff  a*d == c*b as Laurent polynomials.
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

  private:
    void normalize();

    LaurentPoly num_, den_;
};

// Evaluates with automatic retry on poles, walking through generic points.
CycloNum specialize_generic(const RatFunc& f, int max_attempts = 12);

}  // namespace yoknot
