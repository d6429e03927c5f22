#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "yoknot/errors.hpp"

namespace yoknot {

using Rational = mpq_class;
using BigInt = mpz_class;

// m == kAffineM marks the affine case (m = infinity): no v variables and
// unbounded X exponents. Finite m is always >= 1.
inline constexpr int kAffineM = 0;

inline bool is_cyclotomic_m(int m) { return m != kAffineM; }

Rational rational_pow(const Rational& base, long e);

std::string rational_str(const Rational& r);

// Small primes used as generic specialization points (q = primes[0],
// v_a = primes[a], shifted on retry).
long nth_prime(int k);

}  // namespace yoknot
