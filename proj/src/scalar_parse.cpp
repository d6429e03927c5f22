#include "yoknot/scalar_parse.hpp"

#include <cctype>

namespace yoknot {

namespace {

class Parser {
  public:
    Parser(const std::string& text, int d, int m) : s_(text), d_(d), m_(m) {}

    RatFunc run() {
        RatFunc out = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("scalar parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/')) {
                RatFunc rhs = factor();
                if (rhs.is_zero()) fail("division by zero");
                acc /= rhs;
            } else
                return acc;
        }
    }

    RatFunc factor() {
        int sign = 1;
        while (eat('-')) sign = -sign;
        RatFunc base = atom();
        if (eat('^')) {
            long e = integer();
            base = base.pow(static_cast<int>(e));
        }
        if (sign < 0) base = -base;
        return base;
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return RatFunc::constant(d_, m_, Rational(v));
        }
        if (c == 'q') {
            ++pos_;
            return RatFunc::q_power(d_, m_, 1);
        }
        if (c == 'v') {
            ++pos_;
            long idx = integer();
            if (!is_cyclotomic_m(m_)) fail("v variables not available for m = infinity");
            if (idx < 1 || idx > m_) fail("v index out of range");
            return RatFunc::v_power(d_, m_, static_cast<int>(idx), 1);
        }
        if (c == 'z') {
            ++pos_;
            long root = integer();
            if (root != d_) fail("root of unity order " + std::to_string(root) + " does not match context d=" + std::to_string(d_));
            return RatFunc::constant(d_, m_, CycloNum::zeta(d_, 1));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    int d_, m_;
    size_t pos_ = 0;
};

}  // namespace

RatFunc parse_scalar(const std::string& text, int d, int m) {
    return Parser(text, d, m).run();
}

}  // namespace yoknot
