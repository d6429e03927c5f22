#include "yoknot/ratfunc.hpp"

namespace yoknot {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_context(den_);
    if (den_.is_zero()) throw MathError("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one(num_.d(), num_.m());
        return;
    }
    LaurentPoly::Exponents content = den_.min_exponents();
    bool shift = false;
    for (int e : content)
        if (e != 0) shift = true;
    if (shift) {
        LaurentPoly::Exponents neg(content.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -content[i];
        den_ = den_.shifted(neg);
        num_ = num_.shifted(neg);
    }
    CycloNum lead = den_.leading_coeff();
    if (!(lead == CycloNum::one(den_.d()))) {
        CycloNum inv = lead.inverse();
        den_ *= inv;
        num_ *= inv;
    }
}

bool RatFunc::is_one() const {
    return num_ == den_;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    if (den_.is_zero()) throw MathError("zero denominator");
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    return *this *= o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw MathError("inversion of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc base = *this;
    RatFunc out = one(d(), m());
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return out;
}

RatFunc RatFunc::inverted_variables() const {
    return RatFunc(num_.inverted_variables(), den_.inverted_variables());
}

RatFunc RatFunc::lifted_to(int new_d) const {
    return RatFunc(num_.lifted_to(new_d), den_.lifted_to(new_d));
}

CycloNum RatFunc::specialize(const SpecPoint& pt) const {
    CycloNum dv = den_.specialize(pt);
    if (dv.is_zero()) throw MathError("specialization pole");
    return num_.specialize(pt) * dv.inverse();
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::str() const {
    if (den_ == LaurentPoly::one(den_.d(), den_.m())) return num_.str();
    std::string n = num_.str();
    bool np = n.find('+') != std::string::npos || n.find('-', 1) != std::string::npos;
    return (np ? "(" + n + ")" : n) + "/(" + den_.str() + ")";
}

CycloNum specialize_generic(const RatFunc& f, int max_attempts) {
    for (int attempt = 0;; ++attempt) {
        try {
            return f.specialize(SpecPoint::generic(f.m(), attempt));
        } catch (const MathError&) {
            if (attempt + 1 >= max_attempts) throw;
        }
    }
}

}  // namespace yoknot
