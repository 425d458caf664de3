// Small arithmetic expression grammar for user-supplied objectives:
// +, -, *, /, ^ (right associative), sin, cos, numeric literals, pi, e, x.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grosslip/grossone.hpp"  // parse_error

namespace grosslip {

class Expression {
public:
    /// Throws parse_error with the offending position on malformed input.
    static Expression parse(std::string_view source);

    double operator()(double x) const;

    const std::string& source() const noexcept { return source_; }

private:
    enum class Op { constant, variable, add, sub, mul, div, pow, negate, sine, cosine };

    struct Node {
        Op op;
        double value = 0.0;   // Op::constant
        std::size_t lhs = 0;  // child indices into nodes_
        std::size_t rhs = 0;
    };

    double eval(std::size_t node, double x) const;

    friend struct ExpressionParser;

    std::string source_;
    std::vector<Node> nodes_;  // root is nodes_.back()
};

}  // namespace grosslip
