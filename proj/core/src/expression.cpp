#include "grosslip/expression.hpp"

#include <charconv>
#include <cmath>

namespace grosslip {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos); }
};

}  // namespace

// Recursive descent; each parse_* returns the index of the subtree root.
struct ExpressionParser {
    static constexpr int max_depth = 256;

    Cursor cur;
    std::vector<Expression::Node>* nodes;
    int depth = 0;

    struct DepthGuard {
        ExpressionParser* parser;
        explicit DepthGuard(ExpressionParser* p) : parser(p) {
            if (++parser->depth > max_depth) parser->cur.fail("expression nests too deeply");
        }
        ~DepthGuard() { --parser->depth; }
    };

    std::size_t push(Expression::Node n) {
        nodes->push_back(n);
        return nodes->size() - 1;
    }

    std::size_t parse_expr() {
        DepthGuard guard(this);
        std::size_t lhs = parse_term();
        while (true) {
            if (cur.consume('+'))
                lhs = push({Expression::Op::add, 0.0, lhs, parse_term()});
            else if (cur.consume('-'))
                lhs = push({Expression::Op::sub, 0.0, lhs, parse_term()});
            else
                return lhs;
        }
    }

    std::size_t parse_term() {
        std::size_t lhs = parse_factor();
        while (true) {
            if (cur.consume('*'))
                lhs = push({Expression::Op::mul, 0.0, lhs, parse_factor()});
            else if (cur.consume('/'))
                lhs = push({Expression::Op::div, 0.0, lhs, parse_factor()});
            else
                return lhs;
        }
    }

    // '^' is right associative and binds tighter than unary minus, so
    // -x^2 reads as -(x^2).
    std::size_t parse_factor() {
        DepthGuard guard(this);
        if (cur.consume('-')) return push({Expression::Op::negate, 0.0, parse_factor()});
        if (cur.consume('+')) return parse_factor();
        std::size_t base = parse_primary();
        if (cur.consume('^'))
            return push({Expression::Op::pow, 0.0, base, parse_factor()});
        return base;
    }

    std::size_t parse_primary() {
        char c = cur.peek();
        if (c == '(') {
            ++cur.pos;
            std::size_t inner = parse_expr();
            if (!cur.consume(')')) cur.fail("expected ')'");
            return inner;
        }
        if ((c >= '0' && c <= '9') || c == '.') return parse_literal();
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return parse_name();
        cur.fail("expected a number, name or '('");
    }

    std::size_t parse_literal() {
        const char* begin = cur.text.data() + cur.pos;
        const char* end = cur.text.data() + cur.text.size();
        double value = 0.0;
        auto [next, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || next == begin) cur.fail("malformed number");
        cur.pos += static_cast<std::size_t>(next - begin);
        return push({Expression::Op::constant, value});
    }

    std::size_t parse_name() {
        std::size_t start = cur.pos;
        while (cur.pos < cur.text.size() &&
               ((cur.text[cur.pos] >= 'a' && cur.text[cur.pos] <= 'z') ||
                (cur.text[cur.pos] >= 'A' && cur.text[cur.pos] <= 'Z')))
            ++cur.pos;
        std::string_view name = cur.text.substr(start, cur.pos - start);
        if (name == "x") return push({Expression::Op::variable});
        if (name == "pi") return push({Expression::Op::constant, 3.141592653589793});
        if (name == "e") return push({Expression::Op::constant, 2.718281828459045});
        if (name == "sin" || name == "cos") {
            if (!cur.consume('(')) cur.fail("expected '(' after function name");
            std::size_t arg = parse_expr();
            if (!cur.consume(')')) cur.fail("expected ')'");
            return push({name == "sin" ? Expression::Op::sine : Expression::Op::cosine, 0.0, arg});
        }
        cur.pos = start;
        cur.fail("unknown name '" + std::string(name) + "'");
    }
};

Expression Expression::parse(std::string_view source) {
    Expression out;
    out.source_ = std::string(source);
    ExpressionParser parser{{source}, &out.nodes_};
    std::size_t root = parser.parse_expr();
    if (!parser.cur.at_end()) parser.cur.fail("trailing input");
    if (root != out.nodes_.size() - 1) {
        // Make the root the last node so evaluation can start from back().
        out.nodes_.push_back(out.nodes_[root]);
    }
    return out;
}

double Expression::eval(std::size_t node, double x) const {
    const Node& n = nodes_[node];
    switch (n.op) {
        case Op::constant: return n.value;
        case Op::variable: return x;
        case Op::add: return eval(n.lhs, x) + eval(n.rhs, x);
        case Op::sub: return eval(n.lhs, x) - eval(n.rhs, x);
        case Op::mul: return eval(n.lhs, x) * eval(n.rhs, x);
        case Op::div: return eval(n.lhs, x) / eval(n.rhs, x);
        case Op::pow: return std::pow(eval(n.lhs, x), eval(n.rhs, x));
        case Op::negate: return -eval(n.lhs, x);
        case Op::sine: return std::sin(eval(n.lhs, x));
        case Op::cosine: return std::cos(eval(n.lhs, x));
    }
    return 0.0;
}

double Expression::operator()(double x) const { return eval(nodes_.size() - 1, x); }

}  // namespace grosslip
