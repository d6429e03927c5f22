#include "yoknot/numeric.hpp"

namespace yoknot {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw MathError("division by zero: 0 raised to a negative power");
        return Rational(0);
    }
    BigInt num = base.get_num();
    BigInt den = base.get_den();
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt np, dp;
    mpz_pow_ui(np.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), k);
    Rational out;
    if (e > 0)
        out = Rational(np) / Rational(dp);
    else
        out = Rational(dp) / Rational(np);
    out.canonicalize();
    return out;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

long nth_prime(int k) {
    static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                  41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    if (k >= 0 && k < static_cast<int>(sizeof(primes) / sizeof(primes[0]))) return primes[k];
    // Beyond the table, walk upward with trial division. k stays tiny in practice.
    long p = primes[sizeof(primes) / sizeof(primes[0]) - 1];
    int idx = static_cast<int>(sizeof(primes) / sizeof(primes[0])) - 1;
    while (idx < k) {
        ++p;
        bool prime = p > 1;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (prime) ++idx;
    }
    return p;
}

}  // namespace yoknot
