#include "dulac/parse.hpp"

#include "dulac/errors.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace dulac {

namespace {

struct Token {
    enum Kind { Number, Symbol, Op, AbsY, Exp, LParen, RParen, End } kind;
    Rational value;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::End, Rational(0), ""};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            current_ = {Token::Number, rational_from_string(text_.substr(start, pos_ - start)), ""};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "abs_y")
                current_ = {Token::AbsY, Rational(0), name};
            else if (name == "exp")
                current_ = {Token::Exp, Rational(0), name};
            else
                current_ = {Token::Symbol, Rational(0), name};
            return;
        }
        if (c == '(') {
            ++pos_;
            current_ = {Token::LParen, Rational(0), "("};
            return;
        }
        if (c == ')') {
            ++pos_;
            current_ = {Token::RParen, Rational(0), ")"};
            return;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            ++pos_;
            current_ = {Token::Op, Rational(0), std::string(1, c)};
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "' in expression");
    }

    std::string text_;
    size_t pos_ = 0;
    Token current_{Token::End, Rational(0), ""};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lexer_(text) {}

    ExtExpr parse() {
        ExtExpr e = expression();
        if (lexer_.peek().kind != Token::End)
            throw parse_error("trailing input after expression: '" + lexer_.peek().text + "'");
        return e;
    }

  private:
    bool is_op(const char* op) const {
        return lexer_.peek().kind == Token::Op && lexer_.peek().text == op;
    }

    ExtExpr expression() {
        ExtExpr acc = is_op("+") || is_op("-") ? ExtExpr(Rational(0)) : term();
        while (is_op("+") || is_op("-")) {
            bool minus = lexer_.take().text == "-";
            ExtExpr rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    ExtExpr term() {
        ExtExpr acc = unary();
        while (is_op("*") || is_op("/")) {
            bool divide = lexer_.take().text == "/";
            ExtExpr rhs = unary();
            if (divide) {
                auto p = rhs.as_poly();
                if (!p || !p->is_constant())
                    throw parse_error("division only by numeric constants");
                Rational c = p->as_constant();
                if (c == 0) throw parse_error("division by zero");
                acc *= Rational(1) / c;
            } else {
                acc *= rhs;
            }
        }
        return acc;
    }

    ExtExpr unary() {
        if (is_op("-")) {
            lexer_.take();
            return -unary();
        }
        if (is_op("+")) {
            lexer_.take();
            return unary();
        }
        return power();
    }

    ExtExpr power() {
        ExtExpr base = atom();
        if (!is_op("^")) return base;
        lexer_.take();
        bool negative = false;
        if (is_op("-")) {
            lexer_.take();
            negative = true;
        }
        Token t = lexer_.take();
        if (t.kind != Token::Number || denominator(t.value) != 1)
            throw parse_error("exponent must be an integer");
        long e = numerator(t.value).convert_to<long>();
        if (negative) {
            auto p = base.as_poly();
            if (!p || !p->is_constant())
                throw parse_error("negative exponents only on numeric constants");
            return ExtExpr(ParamPoly(rational_pow(p->as_constant(), -e)));
        }
        ExtExpr acc(Rational(1));
        for (long i = 0; i < e; ++i) acc *= base;
        return acc;
    }

    ExtExpr atom() {
        Token t = lexer_.take();
        switch (t.kind) {
            case Token::Number:
                return ExtExpr(ParamPoly(t.value));
            case Token::Symbol:
                return ExtExpr(ParamPoly::variable(t.text));
            case Token::AbsY:
                return ExtExpr::abs_y_pow(1);
            case Token::Exp: {
                if (lexer_.take().kind != Token::LParen) throw parse_error("exp expects '('");
                ExtExpr arg = expression();
                if (lexer_.take().kind != Token::RParen)
                    throw parse_error("missing ')' after exp argument");
                auto p = arg.as_poly();
                if (!p) throw parse_error("exp argument must be polynomial");
                return ExtExpr::exp_of(*p);
            }
            case Token::LParen: {
                ExtExpr e = expression();
                if (lexer_.take().kind != Token::RParen) throw parse_error("missing ')'");
                return e;
            }
            default:
                throw parse_error("unexpected token '" + t.text + "'");
        }
    }

    Lexer lexer_;
};

}  // namespace

ExtExpr parse_extexpr(const std::string& text) { return Parser(text).parse(); }

ParamPoly parse_poly(const std::string& text) {
    ExtExpr e = parse_extexpr(text);
    auto p = e.as_poly();
    if (!p) throw parse_error("expression has |y| or exp factors where a polynomial is required");
    return *p;
}

}  // namespace dulac
