#include "ddelab/exact/expr_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::vector<Var> allowed) : s_(text), allowed_(std::move(allowed)) {}

    FieldElem parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        FieldElem v = expr();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    bool at_end() const { return pos_ >= s_.size(); }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && s_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    FieldElem expr() {
        FieldElem v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    FieldElem term() {
        FieldElem v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else {
                skip_ws();
                if (at_end() || s_[pos_] != '/') return v;
                const int line = line_, col = col_;
                advance();
                FieldElem d = unary();
                if (d.is_zero()) throw ParseError("division by zero", line, col);
                v /= d;
            }
        }
    }

    FieldElem unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    FieldElem power() {
        const int line = line_, col = col_;
        FieldElem base = primary();
        if (!accept('^')) return base;
        long e = exponent();
        skip_ws();
        if (!at_end() && s_[pos_] == '^') fail("chained exponent; use parentheses");
        if (e < 0 && base.is_zero()) throw ParseError("zero raised to a negative power", line, col);
        if (e > 1000 || e < -1000) throw ParseError("exponent out of range", line, col);
        return base.pow(static_cast<int>(e));
    }

    long exponent() {
        bool paren = accept('(');
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer exponent");
        std::string digits = read_digits();
        if (digits.size() > 6) fail("exponent out of range");
        long e = std::stol(digits);
        if (paren && !accept(')')) fail("expected ')'");
        return neg ? -e : e;
    }

    std::string read_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            d += s_[pos_];
            advance();
        }
        return d;
    }

    FieldElem primary() {
        skip_ws();
        if (at_end()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            advance();
            FieldElem v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n(read_digits());
            return FieldElem(GaussianRational(Rational(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const int line = line_, col = col_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                advance();
            }
            if (name == "i") return FieldElem(GaussianRational::i());
            if (auto idx = var_index(name)) {
                for (Var v : allowed_)
                    if (index_of(v) == *idx) return FieldElem(MPoly::var_index(*idx));
            }
            throw ParseError("unknown symbol '" + name + "'", line, col);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::vector<Var> allowed_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

FieldElem parse_expression(std::string_view text, std::initializer_list<Var> allowed) {
    return Parser(text, std::vector<Var>(allowed)).parse();
}

RatFunc parse_ratfunc(std::string_view text, bool allow_params) {
    if (allow_params)
        return RatFunc(parse_expression(text, {Var::z, Var::lambda, Var::mu, Var::nu, Var::k}));
    return RatFunc(parse_expression(text, {Var::z}));
}

} // namespace ddelab
