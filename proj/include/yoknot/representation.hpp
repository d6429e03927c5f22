#pragma once

#include "yoknot/algebra.hpp"
#include "yoknot/tableaux.hpp"

namespace yoknot {

using Matrix = std::vector<std::vector<RatFunc>>;

Matrix matrix_zero(const ParamsPtr& params, int dim);
Matrix matrix_identity(const ParamsPtr& params, int dim);
Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_add(const Matrix& a, const Matrix& b);
Matrix matrix_sub(const Matrix& a, const Matrix& b);
Matrix matrix_scale(const Matrix& a, const RatFunc& c);
bool matrix_equal(const Matrix& a, const Matrix& b);
bool matrix_is_zero(const Matrix& a);
RatFunc matrix_trace(const Matrix& a);

// Quantum content of a node: v_{mpos} q^{2(col - row)}.
RatFunc content_monomial(const ParamsPtr& params, const DMNode& node);

// Irreducible representation attached to a (d,m)-partition: basis indexed by
// standard tableaux, one matrix per generator; t_j and X_1 are diagonal.
struct Representation {
    ParamsPtr params;
    DMPartition shape;
    std::vector<StandardDMTableau> basis;
    std::vector<Matrix> t;      // n matrices
    std::vector<Matrix> g;      // n-1 matrices
    std::vector<Matrix> g_inv;  // g_i - (q-q^{-1}) e_i
    Matrix x1;
    Matrix x1_inv;

    int dimension() const { return static_cast<int>(basis.size()); }
};

Representation build_representation(const ParamsPtr& params, const DMPartition& shape);

// Matrix of e_i from the diagonal t matrices.
Matrix rep_e_matrix(const Representation& rep, int i);

// Evaluates an element letter-by-letter through the generator matrices.
Matrix represent_element(const Representation& rep, const CanonicalElement& x);

RatFunc character_value(const Representation& rep, const CanonicalElement& x);

// Restriction to the subalgebra generated by t_1..t_{n-1}, g_1..g_{n-2}, X_1:
// the character of V_shape must split as the sum over removable nodes.
bool branching_check(const ParamsPtr& params, const DMPartition& shape);

// Ariki's semisimplicity criterion polynomial; the paper indexes the second
// product by 0 <= s < t < m, read here as parameters v_{s+1}, v_{t+1}.
LaurentPoly semisimplicity_poly(int d, int m, int n);

// Dimension of the space of matrices commuting with all generator images at
// an exact generic specialization (1 = irreducibility witness).
int commutant_dimension(const Representation& rep, const SpecPoint& pt);

// Rank of a matrix over Q(zeta_d) by Gaussian elimination.
int cyclo_matrix_rank(std::vector<std::vector<CycloNum>> rows);

}  // namespace yoknot
