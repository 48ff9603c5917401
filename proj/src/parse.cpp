#include "malalgo/parse.hpp"

#include <cctype>

#include "malalgo/errors.hpp"

namespace malalgo {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Equation parse_equation() {
        ExprPtr lhs = parse_sum();
        expect('=');
        ExprPtr rhs = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
        return Equation{std::move(lhs), std::move(rhs)};
    }

    ExprPtr parse_expression_only() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
    }

    ExprPtr parse_sum() {
        ExprPtr acc = parse_term();
        while (true) {
            if (consume('+')) {
                acc = make_bin(BinKind::Add, std::move(acc), parse_term());
            } else if (consume('-')) {
                acc = make_bin(BinKind::Sub, std::move(acc), parse_term());
            } else {
                return acc;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr acc = parse_factor();
        while (consume('*')) {
            acc = make_bin(BinKind::Mul, std::move(acc), parse_factor());
        }
        return acc;
    }

    ExprPtr parse_factor() {
        if (consume('-')) {
            ExprPtr inner = parse_factor();
            return negate_leading(inner);
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return make_xterm(Rational(1));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_sum();
            expect(')');
            return make_scaled(Rational(1), std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value = parse_number();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                return make_xterm(std::move(value));
            }
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                ExprPtr inner = parse_sum();
                expect(')');
                return make_scaled(std::move(value), std::move(inner));
            }
            return make_const(std::move(value));
        }
        throw SyntaxError(pos_, "number, 'x' or '('");
    }

    // digits ('/' digits)? -- the '/' must be adjacent, fraction literals
    // are a single token.
    Rational parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        BigInt num{std::string(text_.substr(start, pos_ - start))};
        if (pos_ < text_.size() && text_[pos_] == '/') {
            std::size_t slash = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw SyntaxError(slash + 1, "denominator digits");
            }
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            BigInt den{std::string(text_.substr(dstart, pos_ - dstart))};
            if (den == 0) throw SyntaxError(dstart, "nonzero denominator");
            return Rational(std::move(num), std::move(den));
        }
        return Rational(std::move(num));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void check_linear(const ExprPtr& e) {
    if (degree(e) > 1) throw NonlinearError(render(e));
}

}  // namespace

Equation parse(std::string_view text) {
    Parser p(text);
    Equation eq = p.parse_equation();
    check_linear(eq.lhs);
    check_linear(eq.rhs);
    return eq;
}

ExprPtr parse_expr(std::string_view text) {
    Parser p(text);
    ExprPtr e = p.parse_expression_only();
    check_linear(e);
    return e;
}

}  // namespace malalgo
