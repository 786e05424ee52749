#ifndef POLYCERT_PARSER_HPP
#define POLYCERT_PARSER_HPP

#include "polycert/ratfun.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace polycert {

// Abstract syntax over rational literals, the variable z, unary minus,
// + - * /, and integer powers. Implicit multiplication is not supported.
struct Expr {
    enum class Kind { number, var, neg, add, sub, mul, div, pow };
    Kind kind = Kind::number;
    Int number;                 // kind == number
    long exponent = 0;          // kind == pow
    std::unique_ptr<Expr> lhs;  // operand of neg/pow, left of binary ops
    std::unique_ptr<Expr> rhs;
    std::size_t begin = 0;  // source offsets, [begin, end)
    std::size_t end = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message), line(line), column(column) {}
    int line;
    int column;
};

struct LowerError : std::runtime_error {
    LowerError(const std::string& message, std::size_t begin, std::size_t end)
        : std::runtime_error(message), begin(begin), end(end) {}
    std::size_t begin;
    std::size_t end;
};

// Grammar, loosest to tightest: +- then */ then unary minus then ^ (right
// associative, integer exponent mandatory). Throws ParseError with 1-based
// line/column on bad input.
ExprPtr parse_expression(const std::string& text);

// Exact reduction to a RatFun. Throws LowerError (with the offending span)
// on division by the zero function.
RatFun lower(const Expr& e);

// parse + lower in one step.
RatFun parse_ratfun(const std::string& text);

}  // namespace polycert

#endif
