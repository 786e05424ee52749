#include "polycert/parser.hpp"

#include <cctype>

namespace polycert {

namespace {

struct Token {
    enum class Kind { number, var, plus, minus, star, slash, caret, lparen, rparen, eof };
    Kind kind;
    Int number;
    std::size_t begin;
    std::size_t end;
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

    [[noreturn]] void fail(const std::string& message, std::size_t pos) const {
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        current_.begin = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::eof;
            current_.end = pos_;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            current_.kind = Token::Kind::number;
            current_.number = Int(text_.substr(start, pos_ - start), 10);
            current_.end = pos_;
            return;
        }
        ++pos_;
        current_.end = pos_;
        switch (c) {
            case 'z': current_.kind = Token::Kind::var; return;
            case '+': current_.kind = Token::Kind::plus; return;
            case '-': current_.kind = Token::Kind::minus; return;
            case '*': current_.kind = Token::Kind::star; return;
            case '/': current_.kind = Token::Kind::slash; return;
            case '^': current_.kind = Token::Kind::caret; return;
            case '(': current_.kind = Token::Kind::lparen; return;
            case ')': current_.kind = Token::Kind::rparen; return;
            default: fail(std::string("unexpected character '") + c + "'", current_.begin);
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        if (lex_.peek().kind == Token::Kind::eof) lex_.fail("empty input", 0);
        ExprPtr e = sum();
        if (lex_.peek().kind != Token::Kind::eof) {
            lex_.fail("unexpected trailing input", lex_.peek().begin);
        }
        return e;
    }

private:
    ExprPtr make(Expr::Kind kind, std::size_t begin, std::size_t end) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->begin = begin;
        e->end = end;
        return e;
    }

    ExprPtr sum() {
        ExprPtr left = product();
        while (lex_.peek().kind == Token::Kind::plus || lex_.peek().kind == Token::Kind::minus) {
            Token op = lex_.take();
            ExprPtr right = product();
            auto node = make(op.kind == Token::Kind::plus ? Expr::Kind::add : Expr::Kind::sub,
                             left->begin, right->end);
            node->lhs = std::move(left);
            node->rhs = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExprPtr product() {
        ExprPtr left = unary();
        while (lex_.peek().kind == Token::Kind::star || lex_.peek().kind == Token::Kind::slash) {
            Token op = lex_.take();
            ExprPtr right = unary();
            auto node = make(op.kind == Token::Kind::star ? Expr::Kind::mul : Expr::Kind::div,
                             left->begin, right->end);
            node->lhs = std::move(left);
            node->rhs = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Token::Kind::minus) {
            Token op = lex_.take();
            ExprPtr inner = unary();
            auto node = make(Expr::Kind::neg, op.begin, inner->end);
            node->lhs = std::move(inner);
            return node;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind != Token::Kind::caret) return base;
        lex_.take();
        auto [value, end] = exponent();
        auto node = make(Expr::Kind::pow, base->begin, end);
        node->lhs = std::move(base);
        node->exponent = value;
        return node;
    }

    // Integer literal, optionally signed and/or parenthesized; a further ^
    // nests to the right.
    std::pair<long, std::size_t> exponent() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::lparen) {
            lex_.take();
            auto [value, inner_end] = exponent();
            if (lex_.peek().kind != Token::Kind::rparen) {
                lex_.fail("expected ')' after exponent", lex_.peek().begin);
            }
            Token close = lex_.take();
            return {value, close.end};
        }
        bool negate = false;
        std::size_t begin = t.begin;
        if (t.kind == Token::Kind::minus) {
            lex_.take();
            negate = true;
        }
        if (lex_.peek().kind != Token::Kind::number) {
            lex_.fail("exponent must be an integer literal", lex_.peek().begin);
        }
        Token num = lex_.take();
        if (!num.number.fits_slong_p()) lex_.fail("exponent too large", begin);
        long value = num.number.get_si();
        std::size_t end = num.end;
        if (lex_.peek().kind == Token::Kind::caret) {
            lex_.take();
            auto [upper, upper_end] = exponent();
            end = upper_end;
            if (upper < 0) lex_.fail("negative exponent in a power tower", begin);
            long acc = 1;
            for (long i = 0; i < upper; ++i) {
                acc *= value;
                if (acc > 1000000 || acc < -1000000) lex_.fail("exponent too large", begin);
            }
            value = acc;
        }
        if (value > 1000000 || value < -1000000) lex_.fail("exponent too large", begin);
        return {negate ? -value : value, end};
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::number: {
                Token num = lex_.take();
                auto node = make(Expr::Kind::number, num.begin, num.end);
                node->number = num.number;
                return node;
            }
            case Token::Kind::var: {
                Token var = lex_.take();
                return make(Expr::Kind::var, var.begin, var.end);
            }
            case Token::Kind::lparen: {
                Token open = lex_.take();
                ExprPtr inner = sum();
                if (lex_.peek().kind != Token::Kind::rparen) {
                    lex_.fail("expected ')'", lex_.peek().begin);
                }
                Token close = lex_.take();
                inner->begin = open.begin;
                inner->end = close.end;
                return inner;
            }
            case Token::Kind::eof: lex_.fail("unexpected end of input", t.begin);
            default: lex_.fail("expected a number, 'z' or '('", t.begin);
        }
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

RatFun lower(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number: return RatFun(Rat(e.number));
        case Expr::Kind::var: return RatFun::variable();
        case Expr::Kind::neg: return -lower(*e.lhs);
        case Expr::Kind::add: return lower(*e.lhs) + lower(*e.rhs);
        case Expr::Kind::sub: return lower(*e.lhs) - lower(*e.rhs);
        case Expr::Kind::mul: return lower(*e.lhs) * lower(*e.rhs);
        case Expr::Kind::div: {
            RatFun den = lower(*e.rhs);
            if (den.is_zero()) {
                throw LowerError("division by the zero function", e.rhs->begin, e.rhs->end);
            }
            return lower(*e.lhs) / den;
        }
        case Expr::Kind::pow: {
            RatFun base = lower(*e.lhs);
            if (e.exponent < 0 && base.is_zero()) {
                throw LowerError("negative power of the zero function", e.begin, e.end);
            }
            return ratfun_pow(base, e.exponent);
        }
    }
    throw std::logic_error("lower: unreachable");
}

RatFun parse_ratfun(const std::string& text) { return lower(*parse_expression(text)); }

}  // namespace polycert
