#include "yoknot/representation.hpp"

namespace yoknot {

Matrix matrix_zero(const ParamsPtr& params, int dim) {
    return Matrix(static_cast<size_t>(dim), std::vector<RatFunc>(static_cast<size_t>(dim), params->scalar_zero()));
}

Matrix matrix_identity(const ParamsPtr& params, int dim) {
    Matrix out = matrix_zero(params, dim);
    for (int i = 0; i < dim; ++i) out[static_cast<size_t>(i)][static_cast<size_t>(i)] = params->scalar_one();
    return out;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<RatFunc>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RatFunc acc = a[i][0];
            acc *= b[0][j];
            for (size_t k = 1; k < n; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = std::move(acc);
        }
    return out;
}

Matrix matrix_add(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[i][j] += b[i][j];
    return out;
}

Matrix matrix_sub(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[i][j] -= b[i][j];
    return out;
}

Matrix matrix_scale(const Matrix& a, const RatFunc& c) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

bool matrix_equal(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

bool matrix_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

RatFunc matrix_trace(const Matrix& a) {
    RatFunc acc = a[0][0];
    for (size_t i = 1; i < a.size(); ++i) acc += a[i][i];
    return acc;
}

RatFunc content_monomial(const ParamsPtr& params, const DMNode& node) {
    LaurentPoly mono = LaurentPoly::v_power(params->d, params->m, node.mpos, 1) *
                       LaurentPoly::q_power(params->d, params->m, 2 * (node.col - node.row));
    return RatFunc(mono);
}

Representation build_representation(const ParamsPtr& params, const DMPartition& shape) {
    if (params->affine()) throw MathError("representations require finite m");
    if (shape.size() != params->n) throw MathError("shape size does not match n");
    Representation rep;
    rep.params = params;
    rep.shape = shape;
    rep.basis = standard_tableaux(shape);
    const int dim = rep.dimension();
    const int n = params->n;

    auto index_of = [&](const StandardDMTableau& t) {
        for (int idx = 0; idx < dim; ++idx)
            if (rep.basis[static_cast<size_t>(idx)] == t) return idx;
        return -1;
    };

    for (int j = 1; j <= n; ++j) {
        Matrix mat = matrix_zero(params, dim);
        for (int c = 0; c < dim; ++c) {
            int p = rep.basis[static_cast<size_t>(c)].node_of(j).dpos;
            mat[static_cast<size_t>(c)][static_cast<size_t>(c)] =
                RatFunc::constant(params->d, params->m, CycloNum::root_xi(params->d, p));
        }
        rep.t.push_back(std::move(mat));
    }

    rep.x1 = matrix_zero(params, dim);
    rep.x1_inv = matrix_zero(params, dim);
    for (int c = 0; c < dim; ++c) {
        RatFunc content = content_monomial(params, rep.basis[static_cast<size_t>(c)].node_of(1));
        rep.x1[static_cast<size_t>(c)][static_cast<size_t>(c)] = content;
        rep.x1_inv[static_cast<size_t>(c)][static_cast<size_t>(c)] = content.inverse();
    }

    RatFunc q = RatFunc::q_power(params->d, params->m, 1);
    RatFunc qinv = RatFunc::q_power(params->d, params->m, -1);
    for (int i = 1; i < n; ++i) {
        Matrix mat = matrix_zero(params, dim);
        for (int c = 0; c < dim; ++c) {
            const StandardDMTableau& tab = rep.basis[static_cast<size_t>(c)];
            int pi = tab.node_of(i).dpos, pi1 = tab.node_of(i + 1).dpos;
            StandardDMTableau swapped = tab.swapped(i);
            if (pi != pi1) {
                int r = index_of(swapped);
                mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = params->scalar_one();
            } else {
                RatFunc ci = content_monomial(params, tab.node_of(i));
                RatFunc ci1 = content_monomial(params, tab.node_of(i + 1));
                RatFunc denom = (ci1 - ci).inverse();
                mat[static_cast<size_t>(c)][static_cast<size_t>(c)] = ci1 * params->q_diff() * denom;
                if (swapped.is_standard()) {
                    int r = index_of(swapped);
                    mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = (q * ci1 - qinv * ci) * denom;
                }
            }
        }
        rep.g.push_back(std::move(mat));
    }

    for (int i = 1; i < n; ++i) {
        Matrix ei = rep_e_matrix(rep, i);
        rep.g_inv.push_back(matrix_sub(rep.g[static_cast<size_t>(i - 1)], matrix_scale(ei, params->q_diff())));
    }
    return rep;
}

Matrix rep_e_matrix(const Representation& rep, int i) {
    const ParamsPtr& params = rep.params;
    const int dim = rep.dimension();
    // t matrices are diagonal, so e_i is diagonal with entry 1 when the
    // d-positions of i and i+1 agree and 0 otherwise; computed here from the
    // defining average.
    Matrix out = matrix_zero(params, dim);
    for (int c = 0; c < dim; ++c) {
        CycloNum ti = rep.t[static_cast<size_t>(i - 1)][static_cast<size_t>(c)][static_cast<size_t>(c)]
                          .num()
                          .constant_value();
        CycloNum ti1 = rep.t[static_cast<size_t>(i)][static_cast<size_t>(c)][static_cast<size_t>(c)]
                           .num()
                           .constant_value();
        CycloNum acc = CycloNum::zero(params->d);
        CycloNum ratio = ti * ti1.inverse();
        CycloNum power = CycloNum::one(params->d);
        for (int s = 0; s < params->d; ++s) {
            acc += power;
            power *= ratio;
        }
        acc *= Rational(1, params->d);
        out[static_cast<size_t>(c)][static_cast<size_t>(c)] = RatFunc::constant(params->d, params->m, acc);
    }
    return out;
}

Matrix represent_element(const Representation& rep, const CanonicalElement& x) {
    const ParamsPtr& params = rep.params;
    const int dim = rep.dimension();
    Matrix out = matrix_zero(params, dim);
    for (const auto& [key, coeff] : x.terms()) {
        Matrix acc = matrix_identity(params, dim);
        for (const Letter& l : monomial_letters(*params, key)) {
            switch (l.kind) {
                case Letter::Kind::T: acc = matrix_mul(acc, rep.t[static_cast<size_t>(l.index - 1)]); break;
                case Letter::Kind::G: acc = matrix_mul(acc, rep.g[static_cast<size_t>(l.index - 1)]); break;
                case Letter::Kind::GInv: acc = matrix_mul(acc, rep.g_inv[static_cast<size_t>(l.index - 1)]); break;
                case Letter::Kind::X1: acc = matrix_mul(acc, rep.x1); break;
                case Letter::Kind::X1Inv: acc = matrix_mul(acc, rep.x1_inv); break;
            }
        }
        out = matrix_add(out, matrix_scale(acc, coeff));
    }
    return out;
}

RatFunc character_value(const Representation& rep, const CanonicalElement& x) {
    return matrix_trace(represent_element(rep, x));
}

bool branching_check(const ParamsPtr& params, const DMPartition& shape) {
    const int n = params->n;
    if (n < 2) return true;
    Representation rep = build_representation(params, shape);

    ParamsPtr sub = make_params(params->d, params->m, n - 1);
    std::vector<Representation> parts;
    for (const DMNode& node : shape.removable_nodes())
        parts.push_back(build_representation(sub, shape.removed(node)));

    for (const MonomialKey& key : all_canonical_keys(*sub)) {
        // Embed the Y(d,m,n-1) monomial into Y(d,m,n).
        MonomialKey lifted;
        lifted.a = key.a;
        lifted.a.push_back(0);
        lifted.b = key.b;
        lifted.b.push_back(0);
        lifted.w = key.w.extended(n);
        CanonicalElement u_n = CanonicalElement::monomial(params, lifted, params->scalar_one());
        CanonicalElement u_sub = CanonicalElement::monomial(sub, key, sub->scalar_one());

        RatFunc lhs = character_value(rep, u_n);
        RatFunc rhs = params->scalar_zero();
        for (const Representation& part : parts) rhs += character_value(part, u_sub);
        if (lhs != rhs) return false;
    }
    return true;
}

LaurentPoly semisimplicity_poly(int d, int m, int n) {
    if (!is_cyclotomic_m(m)) throw MathError("semisimplicity polynomial requires finite m");
    LaurentPoly out = LaurentPoly::one(d, m);
    for (int k = 1; k <= n; ++k) {
        LaurentPoly factor(d, m);
        for (int j = 0; j < k; ++j) factor += LaurentPoly::q_power(d, m, 2 * j);
        out *= factor;
    }
    for (int s = 0; s < m; ++s)
        for (int t = s + 1; t < m; ++t)
            for (int l = -n + 1; l <= n - 1; ++l)
                out *= LaurentPoly::q_power(d, m, 2 * l) * LaurentPoly::v_power(d, m, s + 1, 1) -
                       LaurentPoly::v_power(d, m, t + 1, 1);
    return out;
}

int cyclo_matrix_rank(std::vector<std::vector<CycloNum>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        CycloNum inv = rows[row][col].inverse();
        for (size_t j = col; j < ncols; ++j) rows[row][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col].is_zero()) continue;
            CycloNum factor = rows[r][col];
            for (size_t j = col; j < ncols; ++j) rows[r][j] -= factor * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int commutant_dimension(const Representation& rep, const SpecPoint& pt) {
    const int dim = rep.dimension();
    const int d = rep.params->d;
    std::vector<Matrix> gens;
    for (const Matrix& mat : rep.t) gens.push_back(mat);
    for (const Matrix& mat : rep.g) gens.push_back(mat);
    gens.push_back(rep.x1);

    std::vector<std::vector<CycloNum>> rows;
    for (const Matrix& gen : gens) {
        std::vector<std::vector<CycloNum>> spec(static_cast<size_t>(dim),
                                                std::vector<CycloNum>(static_cast<size_t>(dim)));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                spec[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    gen[static_cast<size_t>(i)][static_cast<size_t>(j)].specialize(pt);
        // Constraint rows of [gen, M] = 0 in the dim^2 unknowns M_kl.
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                std::vector<CycloNum> eq(static_cast<size_t>(dim * dim), CycloNum::zero(d));
                for (int k = 0; k < dim; ++k) {
                    eq[static_cast<size_t>(k * dim + c)] += spec[static_cast<size_t>(r)][static_cast<size_t>(k)];
                    eq[static_cast<size_t>(r * dim + k)] -= spec[static_cast<size_t>(k)][static_cast<size_t>(c)];
                }
                rows.push_back(std::move(eq));
            }
    }
    return dim * dim - cyclo_matrix_rank(std::move(rows));
}

}  // namespace yoknot
