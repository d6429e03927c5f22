#pragma once

#include <string>
#include <vector>

#include "yoknot/numeric.hpp"

namespace yoknot {

int euler_phi(int d);

// Monic coefficients of the d-th cyclotomic polynomial, low degree first,
// size euler_phi(d) + 1.
const std::vector<Rational>& cyclotomic_polynomial(int d);

// Exact element of Q(zeta_d), stored as a residue mod Phi_d of degree
// < phi(d). The coefficient vector always has size phi(d); the canonical
// zero is the all-zero vector.
class CycloNum {
  public:
    CycloNum() : d_(1), c_(1, Rational(0)) {}

    static CycloNum zero(int d) { return CycloNum(d); }
    static CycloNum one(int d) { return from_rational(d, Rational(1)); }
    static CycloNum from_rational(int d, const Rational& r);
    // zeta_d^k for any integer k.
    static CycloNum zeta(int d, long k = 1);
    // xi_k := zeta_d^{k-1}, k = 1..d (the fixed root ordering).
    static CycloNum root_xi(int d, int k) { return zeta(d, k - 1); }

    int root_order() const { return d_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;

    // Embeds into Q(zeta_new_d). Only the identity embedding (same d) and
    // the rational embedding (element of Q) are supported.
    CycloNum lifted_to(int new_d) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const Rational& r);
    CycloNum inverse() const;

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    const std::vector<Rational>& coeffs() const { return c_; }

    // Rendered in the scalar text grammar, e.g. "1/2*z3^2-1".
    std::string str() const;

  private:
    explicit CycloNum(int d);

    int d_;
    std::vector<Rational> c_;
};

}  // namespace yoknot
