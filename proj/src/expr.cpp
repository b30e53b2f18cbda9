#include "plateau/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace plateau {

namespace {

class Parser {
public:
    Parser(const std::string& s, const ExprVars& v) : s_(s), vars_(v) {}

    BigRational parse() {
        BigRational v = sum();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    const ExprVars& vars_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expression '" + s_ + "': " + why + " at " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    BigRational sum() {
        BigRational v = product();
        for (;;) {
            if (eat('+'))
                v += product();
            else if (eat('-'))
                v -= product();
            else
                return v;
        }
    }
    BigRational product() {
        BigRational v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                BigRational d = unary();
                if (d == 0) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    BigRational unary() {
        if (eat('-')) return -unary();
        return power();
    }
    BigRational power() {
        BigRational base = atom();
        if (!eat('^')) return base;
        BigRational e = unary();
        if (denominator(e) != 1) fail("non-integral exponent");
        BigInt ei = numerator(e);
        bool neg = ei < 0;
        if (neg) ei = -ei;
        if (ei > 100000) fail("exponent too large");
        if (neg && base == 0) fail("zero to a negative power");
        BigRational r = 1;
        BigRational b = base;
        unsigned long long k = ei.convert_to<unsigned long long>();
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return neg ? BigRational(1) / r : r;
    }
    BigRational atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            BigRational v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            BigRational v{BigInt(s_.substr(i_, j - i_))};
            i_ = j;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            std::string name = s_.substr(i_, j - i_);
            auto it = vars_.find(name);
            if (it == vars_.end()) fail("unknown variable " + name);
            i_ = j;
            return it->second;
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

BigRational eval_expr(const std::string& text, const ExprVars& vars) { return Parser(text, vars).parse(); }

}  // namespace plateau
