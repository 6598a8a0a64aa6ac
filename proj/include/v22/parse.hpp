#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "mpoly.hpp"

namespace v22 {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& m, size_t p)
        : std::runtime_error(m + " at position " + std::to_string(p)), pos(p) {}
};

// Recursive-descent parser for the polynomial expression grammar: integers,
// rationals p/q, declared variable names, the reserved name u, + - * / ^ and
// parentheses. Whitespace is insignificant. Division is exact and only by
// expressions that are constant in the declared variables (u counts as a
// scalar), so "3/4" and "(u-1)/(u^2+1)" work but "x/x" is rejected.
class Parser {
public:
    Parser(std::string text, Vars vars) : text_(std::move(text)), vars_(std::move(vars)) {
        for (const auto& v : vars_)
            if (v == "u") throw ParseError("'u' is reserved and cannot be a variable", 0);
    }

    MPoly parse() {
        MPoly r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    std::string text_;
    Vars vars_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                size_t at = pos_;
                MPoly d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                if (!d.is_constant())
                    throw ParseError("division only by scalar expressions", at);
                acc = acc / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        MPoly base = atom();
        if (accept('^')) {
            size_t at = pos_;
            skip_ws();
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            if (digits.empty()) throw ParseError("expected integer exponent", at);
            return base.pow(std::stoul(digits));
        }
        return base;
    }

    MPoly atom() {
        skip_ws();
        size_t at = pos_;
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly r = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return MPoly::constant(vars_, Scalar(rat_from_string(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\''))
                name += text_[pos_++];
            if (name == "u") return MPoly::constant(vars_, Scalar::u());
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                throw ParseError("undeclared variable '" + name + "'", at);
            return MPoly::variable(vars_, name);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
};

inline MPoly parse_poly(const std::string& text, Vars vars) {
    return Parser(text, std::move(vars)).parse();
}

// Canonical printer; parse(print(p)) == p for coefficients in Q and Q(u).
// Coefficients in a quadratic extension print with sqrt(.) and are meant for
// reports, not for re-parsing.
inline std::string print_coeff(const Scalar& c) {
    if (c.is_rat()) return to_string(c.rat());
    if (c.is_quadext()) return "(" + to_string(c.quadext()) + ")";
    RatFunc f = c.as_ratfunc();
    if (f.is_poly()) return "(" + to_string(f.num) + ")";
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

inline std::string print_poly(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Scalar coeff = c;
        bool neg = false;
        if (coeff.is_rat() && sgn(coeff.rat()) < 0) {
            neg = true;
            coeff = -coeff;
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += print_coeff(coeff);
        } else if (coeff.is_one()) {
            out += mono;
        } else {
            out += print_coeff(coeff) + "*" + mono;
        }
    }
    return out;
}

}  // namespace v22
