#pragma once

#include <cstdint>
#include <random>

#include "yoknot/numeric.hpp"

namespace yoknot {

// Deterministic RNG for sampled property suites. All randomized checks take
// an explicit seed so reports can name it.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    int range(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }

    Rational rational(int max_abs_num = 5, int max_den = 4) {
        int num = range(-max_abs_num, max_abs_num);
        int den = range(1, max_den);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(int max_abs_num = 5, int max_den = 4) {
        for (;;) {
            Rational r = rational(max_abs_num, max_den);
            if (r != 0) return r;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace yoknot
