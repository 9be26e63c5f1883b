#include "beltrami/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace beltrami::expr {

enum class Kind { number, variable, neg, add, sub, mul, div, pow, call };

enum class Fn { sin, cos, tan, exp, log, sqrt, abs, asin };

class Node {
public:
    Kind kind;
    double num = 0.0;
    Fn fn = Fn::sin;
    NodePtr a, b;

    Node(Kind k) : kind(k) {}
};

namespace {

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>(k);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr num(double v) {
    auto n = std::make_shared<Node>(Kind::number);
    n->num = v;
    return n;
}

bool is_num(const NodePtr& n, double v) {
    return n->kind == Kind::number && n->num == v;
}

// constant-folding builders keep derivative trees small
NodePtr add(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number) return num(a->num + b->num);
    if (is_num(a, 0.0)) return b;
    if (is_num(b, 0.0)) return a;
    return make(Kind::add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number) return num(a->num - b->num);
    if (is_num(b, 0.0)) return a;
    if (is_num(a, 0.0)) return make(Kind::neg, std::move(b));
    return make(Kind::sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number) return num(a->num * b->num);
    if (is_num(a, 0.0) || is_num(b, 0.0)) return num(0.0);
    if (is_num(a, 1.0)) return b;
    if (is_num(b, 1.0)) return a;
    return make(Kind::mul, std::move(a), std::move(b));
}

NodePtr divn(NodePtr a, NodePtr b) {
    if (is_num(a, 0.0)) return num(0.0);
    if (is_num(b, 1.0)) return a;
    if (a->kind == Kind::number && b->kind == Kind::number && b->num != 0.0)
        return num(a->num / b->num);
    return make(Kind::div, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
    if (a->kind == Kind::number) return num(-a->num);
    if (a->kind == Kind::neg) return a->a;
    return make(Kind::neg, std::move(a));
}

NodePtr pown(NodePtr a, NodePtr b) {
    if (is_num(b, 1.0)) return a;
    if (is_num(b, 0.0)) return num(1.0);
    return make(Kind::pow, std::move(a), std::move(b));
}

NodePtr call(Fn f, NodePtr a) {
    auto n = std::make_shared<Node>(Kind::call);
    n->fn = f;
    n->a = std::move(a);
    return n;
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    NodePtr parse_expression() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = add(lhs, parse_term());
            } else if (accept('-')) {
                lhs = sub(lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = mul(lhs, parse_unary());
            } else if (accept('/')) {
                lhs = divn(lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) return neg(parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) {
            // right associative; the exponent may carry a unary minus
            return pown(base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expression();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        const char* begin = text.data() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos += static_cast<std::size_t>(end - begin);
        if (!std::isfinite(v)) fail("numeric literal out of range");
        return num(v);
    }

    NodePtr parse_name() {
        const std::size_t start = pos;
        while (pos < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        const std::string_view name = text.substr(start, pos - start);
        if (name == "y") return make(Kind::variable);

        Fn f;
        if (name == "sin") f = Fn::sin;
        else if (name == "cos") f = Fn::cos;
        else if (name == "tan") f = Fn::tan;
        else if (name == "exp") f = Fn::exp;
        else if (name == "log") f = Fn::log;
        else if (name == "sqrt") f = Fn::sqrt;
        else if (name == "abs") f = Fn::abs;
        else if (name == "asin") f = Fn::asin;
        else {
            pos = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        expect('(');
        NodePtr arg = parse_expression();
        expect(')');
        return call(f, arg);
    }
};

} // namespace

NodePtr parse(std::string_view text) {
    Parser p{text};
    NodePtr root = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return root;
}

NodePtr constant(double v) { return num(v); }
NodePtr variable() { return make(Kind::variable); }

double eval(const NodePtr& n, double y) {
    switch (n->kind) {
    case Kind::number: return n->num;
    case Kind::variable: return y;
    case Kind::neg: return -eval(n->a, y);
    case Kind::add: return eval(n->a, y) + eval(n->b, y);
    case Kind::sub: return eval(n->a, y) - eval(n->b, y);
    case Kind::mul: return eval(n->a, y) * eval(n->b, y);
    case Kind::div: return eval(n->a, y) / eval(n->b, y);
    case Kind::pow: return std::pow(eval(n->a, y), eval(n->b, y));
    case Kind::call: {
        const double v = eval(n->a, y);
        switch (n->fn) {
        case Fn::sin: return std::sin(v);
        case Fn::cos: return std::cos(v);
        case Fn::tan: return std::tan(v);
        case Fn::exp: return std::exp(v);
        case Fn::log: return std::log(v);
        case Fn::sqrt: return std::sqrt(v);
        case Fn::abs: return std::abs(v);
        case Fn::asin: return std::asin(v);
        }
        break;
    }
    }
    return 0.0; // unreachable
}

NodePtr derivative(const NodePtr& n) {
    switch (n->kind) {
    case Kind::number: return num(0.0);
    case Kind::variable: return num(1.0);
    case Kind::neg: return neg(derivative(n->a));
    case Kind::add: return add(derivative(n->a), derivative(n->b));
    case Kind::sub: return sub(derivative(n->a), derivative(n->b));
    case Kind::mul:
        return add(mul(derivative(n->a), n->b), mul(n->a, derivative(n->b)));
    case Kind::div:
        return divn(sub(mul(derivative(n->a), n->b), mul(n->a, derivative(n->b))),
                    pown(n->b, num(2.0)));
    case Kind::pow: {
        // d(f^g) = f^g * (g' log f + g f'/f); constant exponent simplifies
        if (n->b->kind == Kind::number) {
            const double e = n->b->num;
            return mul(mul(num(e), pown(n->a, num(e - 1.0))), derivative(n->a));
        }
        NodePtr fg = pown(n->a, n->b);
        NodePtr t1 = mul(derivative(n->b), call(Fn::log, n->a));
        NodePtr t2 = mul(n->b, divn(derivative(n->a), n->a));
        return mul(fg, add(t1, t2));
    }
    case Kind::call: {
        NodePtr inner = derivative(n->a);
        switch (n->fn) {
        case Fn::sin: return mul(call(Fn::cos, n->a), inner);
        case Fn::cos: return neg(mul(call(Fn::sin, n->a), inner));
        case Fn::tan:
            return divn(inner, pown(call(Fn::cos, n->a), num(2.0)));
        case Fn::exp: return mul(call(Fn::exp, n->a), inner);
        case Fn::log: return divn(inner, n->a);
        case Fn::sqrt:
            return divn(inner, mul(num(2.0), call(Fn::sqrt, n->a)));
        case Fn::abs:
            // sign(f) * f' written as f/|f| * f'
            return mul(divn(n->a, call(Fn::abs, n->a)), inner);
        case Fn::asin:
            return divn(inner, call(Fn::sqrt,
                                    sub(num(1.0), pown(n->a, num(2.0)))));
        }
        break;
    }
    }
    return num(0.0); // unreachable
}

std::string to_string(const NodePtr& n) {
    std::ostringstream os;
    switch (n->kind) {
    case Kind::number: os << n->num; break;
    case Kind::variable: os << 'y'; break;
    case Kind::neg: os << "(-" << to_string(n->a) << ')'; break;
    case Kind::add: os << '(' << to_string(n->a) << " + " << to_string(n->b) << ')'; break;
    case Kind::sub: os << '(' << to_string(n->a) << " - " << to_string(n->b) << ')'; break;
    case Kind::mul: os << '(' << to_string(n->a) << " * " << to_string(n->b) << ')'; break;
    case Kind::div: os << '(' << to_string(n->a) << " / " << to_string(n->b) << ')'; break;
    case Kind::pow: os << '(' << to_string(n->a) << " ^ " << to_string(n->b) << ')'; break;
    case Kind::call: {
        const char* names[] = {"sin", "cos", "tan", "exp", "log", "sqrt", "abs", "asin"};
        os << names[static_cast<int>(n->fn)] << '(' << to_string(n->a) << ')';
        break;
    }
    }
    return os.str();
}

} // namespace beltrami::expr
