#include "yoknot/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace yoknot {

SpecPoint SpecPoint::generic(int m, int attempt) {
    SpecPoint pt;
    pt.q = Rational(nth_prime(attempt));
    if (is_cyclotomic_m(m)) {
        pt.v.reserve(static_cast<size_t>(m));
        for (int a = 1; a <= m; ++a) pt.v.emplace_back(nth_prime(attempt + a));
    }
    return pt;
}

LaurentPoly LaurentPoly::constant(int d, int m, const Rational& r) {
    return constant(d, m, CycloNum::from_rational(d, r));
}

LaurentPoly LaurentPoly::constant(int d, int m, const CycloNum& c) {
    LaurentPoly out(d, m);
    out.add_term(Exponents(static_cast<size_t>(out.nvars()), 0), c);
    return out;
}

LaurentPoly LaurentPoly::q_power(int d, int m, int e) {
    LaurentPoly out(d, m);
    Exponents expo(static_cast<size_t>(out.nvars()), 0);
    expo[0] = e;
    out.add_term(expo, CycloNum::one(d));
    return out;
}

LaurentPoly LaurentPoly::v_power(int d, int m, int a, int e) {
    if (!is_cyclotomic_m(m)) throw MathError("v variables do not exist for m = infinity");
    if (a < 1 || a > m) throw MathError("v index out of range");
    LaurentPoly out(d, m);
    Exponents expo(static_cast<size_t>(out.nvars()), 0);
    expo[static_cast<size_t>(a)] = e;
    out.add_term(expo, CycloNum::one(d));
    return out;
}

LaurentPoly LaurentPoly::monomial(int d, int m, Exponents expo, CycloNum coeff) {
    LaurentPoly out(d, m);
    if (expo.size() != static_cast<size_t>(out.nvars())) throw MathError("exponent vector length mismatch");
    out.add_term(expo, coeff);
    return out;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

CycloNum LaurentPoly::constant_value() const {
    if (terms_.empty()) return CycloNum::zero(d_);
    if (!is_constant()) throw MathError("polynomial is not constant");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponents& expo, const CycloNum& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_context(const LaurentPoly& o) const {
    if (d_ != o.d_ || m_ != o.m_) throw MathError("mismatched variable context");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(d_, m_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    check_context(o);
    LaurentPoly out(d_, m_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycloNum& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, t] : terms_) t *= c;
    // A nonzero field scalar cannot create zero coefficients.
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, t] : terms_) t *= r;
    return *this;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw MathError("negative power of a non-monomial polynomial");
        const auto& [expo, coeff] = *terms_.begin();
        Exponents ne(expo.size());
        for (size_t i = 0; i < ne.size(); ++i) ne[i] = expo[i] * e;
        CycloNum c = coeff.inverse();
        CycloNum cp = CycloNum::one(d_);
        for (int k = 0; k < -e; ++k) cp *= c;
        return monomial(d_, m_, ne, cp);
    }
    LaurentPoly base = *this;
    LaurentPoly out = one(d_, m_);
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return out;
}

LaurentPoly LaurentPoly::inverted_variables() const {
    LaurentPoly out(d_, m_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(e.size());
        for (size_t i = 0; i < ne.size(); ++i) ne[i] = -e[i];
        out.terms_.emplace(ne, c);
    }
    return out;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
    Exponents out(static_cast<size_t>(nvars()), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            out = e;
            first = false;
        } else {
            for (size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], e[i]);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
    LaurentPoly out(d_, m_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(e.size());
        for (size_t i = 0; i < ne.size(); ++i) ne[i] = e[i] + delta[i];
        out.terms_.emplace(ne, c);
    }
    return out;
}

const CycloNum& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw MathError("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::lifted_to(int new_d) const {
    if (new_d == d_) return *this;
    LaurentPoly out(new_d, m_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.lifted_to(new_d));
    return out;
}

CycloNum LaurentPoly::specialize(const SpecPoint& pt) const {
    if (is_cyclotomic_m(m_) && pt.v.size() != static_cast<size_t>(m_))
        throw MathError("specialization point has the wrong number of v values");
    CycloNum acc = CycloNum::zero(d_);
    for (const auto& [e, c] : terms_) {
        Rational val = rational_pow(pt.q, e[0]);
        for (size_t a = 1; a < e.size(); ++a) val *= rational_pow(pt.v[a - 1], e[a]);
        acc += c * val;
    }
    return acc;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_context(b);
    return a.terms_ == b.terms_;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-', 1) != std::string::npos;
        std::vector<std::string> vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::ostringstream v;
            v << (i == 0 ? std::string("q") : "v" + std::to_string(i));
            if (e[i] != 1) v << "^" << e[i];
            vars.push_back(v.str());
        }
        std::ostringstream term;
        if (vars.empty()) {
            term << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") term << (needs_parens ? "(" + cs + ")" : cs) << "*";
            for (size_t i = 0; i < vars.size(); ++i) {
                if (i) term << "*";
                term << vars[i];
            }
        }
        std::string t = term.str();
        if (!first && t[0] != '-') os << "+";
        os << t;
        first = false;
    }
    return os.str();
}

}  // namespace yoknot
