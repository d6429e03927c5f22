#include "yoknot/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace yoknot {

namespace {

using Poly = std::vector<Rational>;  // dense, low degree first

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) {
    int deg = degree(p);
    p.resize(static_cast<size_t>(deg + 1));
}

// Exact quotient; remainder must come out zero for the callers here.
Poly divide_exact(Poly num, const Poly& den) {
    int dd = degree(den);
    Poly quot(num.size(), Rational(0));
    for (int k = degree(num); k >= dd; --k) {
        if (num[k] == 0) continue;
        Rational c = num[k] / den[dd];
        quot[k - dd] = c;
        for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    trim(quot);
    return quot;
}

Poly poly_mod(Poly num, const Poly& den) {
    int dd = degree(den);
    for (int k = degree(num); k >= dd; --k) {
        if (num[k] == 0) continue;
        Rational c = num[k] / den[dd];
        for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    trim(num);
    return num;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

const Poly& cyclo_poly_cached(int d);

Poly compute_cyclo_poly(int d) {
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    Poly num(static_cast<size_t>(d) + 1, Rational(0));
    num[0] = Rational(-1);
    num[static_cast<size_t>(d)] = Rational(1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        num = divide_exact(std::move(num), cyclo_poly_cached(e));
    }
    return num;
}

const Poly& cyclo_poly_cached(int d) {
    static std::map<int, Poly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    // Computed outside the lock: the divisor recursion re-enters this cache.
    Poly p = compute_cyclo_poly(d);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

int euler_phi(int d) {
    if (d <= 0) throw MathError("root order must be positive");
    int result = d;
    int x = d;
    for (int p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        while (x % p == 0) x /= p;
        result -= result / p;
    }
    if (x > 1) result -= result / x;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int d) {
    if (d <= 0) throw MathError("root order must be positive");
    return cyclo_poly_cached(d);
}

CycloNum::CycloNum(int d) : d_(d), c_(static_cast<size_t>(euler_phi(d)), Rational(0)) {}

CycloNum CycloNum::from_rational(int d, const Rational& r) {
    CycloNum out(d);
    out.c_[0] = r;
    return out;
}

CycloNum CycloNum::zeta(int d, long k) {
    k %= d;
    if (k < 0) k += d;
    const Poly& phi = cyclotomic_polynomial(d);
    Poly x(static_cast<size_t>(k) + 1, Rational(0));
    x[static_cast<size_t>(k)] = Rational(1);
    Poly red = poly_mod(std::move(x), phi);
    CycloNum out(d);
    for (size_t i = 0; i < red.size(); ++i) out.c_[i] = red[i];
    return out;
}

bool CycloNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw MathError("cyclotomic number is not rational");
    return c_[0];
}

CycloNum CycloNum::lifted_to(int new_d) const {
    if (new_d == d_) return *this;
    return from_rational(new_d, rational_value());
}

CycloNum CycloNum::operator-() const {
    CycloNum out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (d_ != o.d_) throw MathError("cyclotomic root order mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (d_ != o.d_) throw MathError("cyclotomic root order mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (d_ != o.d_) throw MathError("cyclotomic root order mismatch");
    Poly prod = poly_mul(c_, o.c_);
    Poly red = poly_mod(std::move(prod), cyclotomic_polynomial(d_));
    for (auto& c : c_) c = 0;
    for (size_t i = 0; i < red.size(); ++i) c_[i] = red[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw MathError("division by zero in cyclotomic field");
    // Extended Euclid in Q[x]: u*a + v*Phi = gcd = const, since Phi_d is
    // irreducible and deg a < deg Phi.
    Poly a = c_;
    trim(a);
    Poly b = cyclotomic_polynomial(d_);
    Poly ua = {Rational(1)};  // coefficient of the original a in a
    Poly ub = {};             // coefficient of the original a in b
    while (degree(b) >= 0) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            std::swap(ua, ub);
            continue;
        }
        Rational c = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        int shift = da - db;
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(shift + j)] -= c * b[static_cast<size_t>(j)];
        if (ub.size() + static_cast<size_t>(shift) > ua.size()) ua.resize(ub.size() + static_cast<size_t>(shift), Rational(0));
        for (size_t j = 0; j < ub.size(); ++j) ua[static_cast<size_t>(shift) + j] -= c * ub[j];
        trim(a);
    }
    if (degree(a) != 0) throw MathError("cyclotomic inversion failed");
    Rational g = a[0];
    CycloNum out(d_);
    Poly red = poly_mod(std::move(ua), cyclotomic_polynomial(d_));
    for (size_t i = 0; i < red.size(); ++i) out.c_[i] = red[i] / g;
    return out;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.d_ != b.d_) throw MathError("cyclotomic root order mismatch");
    return a.c_ == b.c_;
}

std::string CycloNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        if (!first) {
            os << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        } else if (c < 0 && k > 0) {
            os << "-";
            c = -c;
        }
        if (k == 0) {
            os << rational_str(c);
        } else {
            if (c != 1) os << rational_str(c) << "*";
            os << "z" << d_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace yoknot
