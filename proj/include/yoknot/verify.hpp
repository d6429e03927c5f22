#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yoknot/algebra.hpp"

namespace yoknot {

// Relation suites shared by the unit tests, the CLI reps-verify command and
// the acceptance checks. Each returns a list of human-readable failure
// descriptions; empty means everything holds exactly.

// Defining relations of Y(d,m,n) evaluated in CanonicalElement.
std::vector<std::string> element_relation_failures(const ParamsPtr& params);

// Same relations as exact matrix identities in every irreducible
// representation (finite m only).
std::vector<std::string> representation_relation_failures(const ParamsPtr& params);

// The three rewriting identities (commutation of g_i past X powers, and the
// two X_1 conjugation formulas) for exponents a, b in [-2, 2].
std::vector<std::string> lemma_formula_failures(const ParamsPtr& params);

// multiply associativity on random monomial triples.
std::vector<std::string> associativity_failures(const ParamsPtr& params, int samples, uint64_t seed);

// X_i^a as an element, any sign of a.
CanonicalElement x_power(const ParamsPtr& params, int i, int a);

}  // namespace yoknot
