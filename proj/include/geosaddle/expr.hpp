// Bivariate scalar expressions: immutable AST, recursive-descent parser,
// structure-preserving printer, numeric evaluation, and the exact polynomial
// bridge (BiPoly conversion, composition with parametric paths).
//
// Grammar (whitespace insignificant):
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?          ^ binds tighter than unary minus,
//   atom  := number | 'x' | 'y'           and is right-associative
//          | ident '(' expr (',' expr)* ')' | '(' expr ')'
//   ident in {abs, min, max, sin, cos, exp}
//
// The parser folds two constant forms so that literals round-trip
// structurally: -<const> becomes a negative constant, and <const>/<const>
// becomes a rational constant (fraction literals like 3/4).
#pragma once

#include <geosaddle/bipoly.hpp>
#include <geosaddle/errors.hpp>
#include <geosaddle/rational.hpp>
#include <geosaddle/unipoly.hpp>
#include <geosaddle/vec2.hpp>

#include <cctype>
#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geosaddle {

enum class NodeKind {
    Const,
    Var,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    IntPow,
    Abs,
    Min,
    Max,
    Sin,
    Cos,
    Exp
};

enum class Axis { X, Y };

class Expr {
public:
    Expr() : Expr(constant(Rational(0))) {}

    NodeKind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    Axis axis() const { return node_->axis; }
    int exponent() const { return node_->exponent; }
    std::size_t arity() const { return node_->kids.size(); }
    const Expr& child(std::size_t i) const { return node_->kids[i]; }

    static Expr constant(Rational c)
    {
        Node n;
        n.kind = NodeKind::Const;
        n.value = std::move(c);
        return Expr(std::move(n));
    }

    static Expr constant(long c) { return constant(Rational(c)); }

    static Expr var(Axis a)
    {
        Node n;
        n.kind = NodeKind::Var;
        n.axis = a;
        return Expr(std::move(n));
    }

    static Expr x() { return var(Axis::X); }
    static Expr y() { return var(Axis::Y); }

    static Expr unary(NodeKind k, Expr a)
    {
        Node n;
        n.kind = k;
        n.kids = {std::move(a)};
        return Expr(std::move(n));
    }

    static Expr binary(NodeKind k, Expr a, Expr b)
    {
        Node n;
        n.kind = k;
        n.kids = {std::move(a), std::move(b)};
        return Expr(std::move(n));
    }

    static Expr int_pow(Expr base, int k)
    {
        if (k < 0)
            throw std::invalid_argument("IntPow exponent must be >= 0");
        Node n;
        n.kind = NodeKind::IntPow;
        n.exponent = k;
        n.kids = {std::move(base)};
        return Expr(std::move(n));
    }

    friend Expr operator+(Expr a, Expr b)
    {
        return binary(NodeKind::Add, std::move(a), std::move(b));
    }
    friend Expr operator-(Expr a, Expr b)
    {
        return binary(NodeKind::Sub, std::move(a), std::move(b));
    }
    friend Expr operator*(Expr a, Expr b)
    {
        return binary(NodeKind::Mul, std::move(a), std::move(b));
    }

    // Constant literals are canonical: const/const collapses to one rational
    // constant ("3/4") and -const to a negative constant, matching what the
    // parser produces. Other shapes are preserved verbatim.
    friend Expr operator/(Expr a, Expr b)
    {
        if (a.kind() == NodeKind::Const && b.kind() == NodeKind::Const
            && b.value() != 0)
            return constant(a.value() / b.value());
        return binary(NodeKind::Div, std::move(a), std::move(b));
    }

    friend Expr operator-(Expr a)
    {
        if (a.kind() == NodeKind::Const)
            return constant(-a.value());
        return unary(NodeKind::Neg, std::move(a));
    }

    friend bool operator==(const Expr& a, const Expr& b)
    {
        if (a.node_ == b.node_)
            return true;
        const Node& na = *a.node_;
        const Node& nb = *b.node_;
        if (na.kind != nb.kind || na.kids.size() != nb.kids.size())
            return false;
        switch (na.kind) {
        case NodeKind::Const:
            if (na.value != nb.value)
                return false;
            break;
        case NodeKind::Var:
            if (na.axis != nb.axis)
                return false;
            break;
        case NodeKind::IntPow:
            if (na.exponent != nb.exponent)
                return false;
            break;
        default:
            break;
        }
        for (std::size_t i = 0; i < na.kids.size(); ++i)
            if (!(na.kids[i] == nb.kids[i]))
                return false;
        return true;
    }

private:
    struct Node {
        NodeKind kind = NodeKind::Const;
        Rational value;
        Axis axis = Axis::X;
        int exponent = 0;
        std::vector<Expr> kids;
    };

    explicit Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    std::shared_ptr<const Node> node_;
};

inline Expr pow(Expr base, int k) { return Expr::int_pow(std::move(base), k); }
inline Expr abs(Expr a) { return Expr::unary(NodeKind::Abs, std::move(a)); }
inline Expr sin(Expr a) { return Expr::unary(NodeKind::Sin, std::move(a)); }
inline Expr cos(Expr a) { return Expr::unary(NodeKind::Cos, std::move(a)); }
inline Expr exp(Expr a) { return Expr::unary(NodeKind::Exp, std::move(a)); }
inline Expr min(Expr a, Expr b)
{
    return Expr::binary(NodeKind::Min, std::move(a), std::move(b));
}
inline Expr max(Expr a, Expr b)
{
    return Expr::binary(NodeKind::Max, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run()
    {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail({"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    Expr parse_expr()
    {
        Expr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                lhs = lhs + parse_term();
            else if (accept('-'))
                lhs = lhs - parse_term();
            else
                return lhs;
        }
    }

    Expr parse_term()
    {
        Expr lhs = parse_unary();
        for (;;) {
            skip_ws();
            if (accept('*'))
                lhs = lhs * parse_unary();
            else if (accept('/'))
                lhs = lhs / parse_unary();
            else
                return lhs;
        }
    }

    Expr parse_unary()
    {
        skip_ws();
        if (accept('-'))
            return -parse_unary();
        return parse_power();
    }

    Expr parse_power()
    {
        Expr base = parse_atom();
        skip_ws();
        if (!accept('^'))
            return base;
        return Expr::int_pow(std::move(base), parse_exponent_chain());
    }

    // Right-associative integer exponent chain: x^3^2 = x^(3^2).
    int parse_exponent_chain()
    {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(byte(pos_)))
            throw NonIntegerExponent(at);
        long k = 0;
        while (pos_ < text_.size() && std::isdigit(byte(pos_))) {
            k = k * 10 + (byte(pos_) - '0');
            if (k > 1'000'000)
                throw NonIntegerExponent(at);
            ++pos_;
        }
        if (pos_ < text_.size() && byte(pos_) == '.')
            throw NonIntegerExponent(at);
        skip_ws();
        if (accept('^')) {
            int e = parse_exponent_chain();
            long folded = 1;
            for (int i = 0; i < e; ++i) {
                folded *= k;
                if (folded > 1'000'000)
                    throw NonIntegerExponent(at);
            }
            k = folded;
        }
        return static_cast<int>(k);
    }

    Expr parse_atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail(atom_expectation());
        char c = byte(pos_);
        if (std::isdigit(c))
            return parse_number();
        if (accept('(')) {
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isalpha(c))
            return parse_ident();
        fail(atom_expectation());
    }

    Expr parse_number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(byte(pos_)))
            ++pos_;
        if (pos_ < text_.size() && byte(pos_) == '.') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(byte(pos_)))
                fail({"digit"});
            while (pos_ < text_.size() && std::isdigit(byte(pos_)))
                ++pos_;
        }
        return Expr::constant(rational_from_decimal(
            std::string(text_.substr(start, pos_ - start))));
    }

    Expr parse_ident()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(byte(pos_)))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "x")
            return Expr::x();
        if (name == "y")
            return Expr::y();

        skip_ws();
        if (pos_ >= text_.size() || byte(pos_) != '(') {
            pos_ = start;
            fail(atom_expectation());
        }
        std::size_t arity;
        NodeKind kind;
        if (name == "abs") {
            kind = NodeKind::Abs;
            arity = 1;
        } else if (name == "sin") {
            kind = NodeKind::Sin;
            arity = 1;
        } else if (name == "cos") {
            kind = NodeKind::Cos;
            arity = 1;
        } else if (name == "exp") {
            kind = NodeKind::Exp;
            arity = 1;
        } else if (name == "min") {
            kind = NodeKind::Min;
            arity = 2;
        } else if (name == "max") {
            kind = NodeKind::Max;
            arity = 2;
        } else {
            throw UnknownFunction(start, name);
        }

        expect('(');
        std::vector<Expr> args;
        args.push_back(parse_expr());
        skip_ws();
        while (accept(','))
            args.push_back(parse_expr());
        skip_ws();
        std::size_t close_at = pos_;
        expect(')');
        if (args.size() != arity)
            throw SyntaxError(close_at,
                              {name + " takes " + std::to_string(arity)
                               + (arity == 1 ? " argument" : " arguments")});
        if (arity == 1)
            return Expr::unary(kind, std::move(args[0]));
        return Expr::binary(kind, std::move(args[0]), std::move(args[1]));
    }

    static std::vector<std::string> atom_expectation()
    {
        return {"number", "x", "y", "function", "("};
    }

    char byte(std::size_t i) const { return text_[i]; }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(byte(pos_)))
            ++pos_;
    }

    bool accept(char c)
    {
        if (pos_ < text_.size() && byte(pos_) == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        skip_ws();
        if (!accept(c))
            fail({std::string(1, c)});
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        throw SyntaxError(pos_, std::move(expected));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing (re-parses to a structurally identical tree)

namespace detail {

// Larger binds tighter: Add/Sub 1, Mul/Div 2, Neg 3, IntPow 4, atoms 5.
inline int precedence(const Expr& e)
{
    switch (e.kind()) {
    case NodeKind::Add:
    case NodeKind::Sub:
        return 1;
    case NodeKind::Mul:
    case NodeKind::Div:
        return 2;
    case NodeKind::Neg:
        return 3;
    case NodeKind::Const:
        // A fraction literal prints as p/q and re-parses at division
        // precedence; a negative one starts with unary minus.
        if (denominator(e.value()) != 1)
            return 2;
        return e.value() < 0 ? 3 : 5;
    case NodeKind::IntPow:
        return 4;
    default:
        return 5;
    }
}

inline void print_to(const Expr& e, std::string& out, int min_prec)
{
    const bool parens = precedence(e) < min_prec;
    if (parens)
        out += '(';
    switch (e.kind()) {
    case NodeKind::Const:
        out += to_string(e.value());
        break;
    case NodeKind::Var:
        out += e.axis() == Axis::X ? 'x' : 'y';
        break;
    case NodeKind::Neg:
        out += '-';
        print_to(e.child(0), out, 3);
        break;
    case NodeKind::Add:
    case NodeKind::Sub:
        print_to(e.child(0), out, 1);
        out += e.kind() == NodeKind::Add ? " + " : " - ";
        print_to(e.child(1), out, 2);
        break;
    case NodeKind::Mul:
    case NodeKind::Div:
        print_to(e.child(0), out, 2);
        out += e.kind() == NodeKind::Mul ? "*" : "/";
        print_to(e.child(1), out, 3);
        break;
    case NodeKind::IntPow:
        print_to(e.child(0), out, 5);
        out += '^';
        out += std::to_string(e.exponent());
        break;
    case NodeKind::Abs:
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp: {
        const char* name = e.kind() == NodeKind::Abs   ? "abs"
                           : e.kind() == NodeKind::Sin ? "sin"
                           : e.kind() == NodeKind::Cos ? "cos"
                                                       : "exp";
        out += name;
        out += '(';
        print_to(e.child(0), out, 1);
        out += ')';
        break;
    }
    case NodeKind::Min:
    case NodeKind::Max:
        out += e.kind() == NodeKind::Min ? "min(" : "max(";
        print_to(e.child(0), out, 1);
        out += ", ";
        print_to(e.child(1), out, 1);
        out += ')';
        break;
    }
    if (parens)
        out += ')';
}

} // namespace detail

inline std::string to_string(const Expr& e)
{
    std::string out;
    detail::print_to(e, out, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

inline double eval_value(const Expr& e, Vec2 p)
{
    switch (e.kind()) {
    case NodeKind::Const:
        return to_double(e.value());
    case NodeKind::Var:
        return e.axis() == Axis::X ? p.x : p.y;
    case NodeKind::Neg:
        return -eval_value(e.child(0), p);
    case NodeKind::Add:
        return eval_value(e.child(0), p) + eval_value(e.child(1), p);
    case NodeKind::Sub:
        return eval_value(e.child(0), p) - eval_value(e.child(1), p);
    case NodeKind::Mul:
        return eval_value(e.child(0), p) * eval_value(e.child(1), p);
    case NodeKind::Div: {
        double num = eval_value(e.child(0), p);
        double den = eval_value(e.child(1), p);
        if (den == 0.0)
            throw DomainError("division by zero");
        return num / den;
    }
    case NodeKind::IntPow: {
        double base = eval_value(e.child(0), p);
        double acc = 1.0;
        for (int i = 0; i < e.exponent(); ++i)
            acc *= base;
        return acc;
    }
    case NodeKind::Abs:
        return std::abs(eval_value(e.child(0), p));
    case NodeKind::Min:
        return std::min(eval_value(e.child(0), p), eval_value(e.child(1), p));
    case NodeKind::Max:
        return std::max(eval_value(e.child(0), p), eval_value(e.child(1), p));
    case NodeKind::Sin:
        return std::sin(eval_value(e.child(0), p));
    case NodeKind::Cos:
        return std::cos(eval_value(e.child(0), p));
    case NodeKind::Exp:
        return std::exp(eval_value(e.child(0), p));
    }
    throw DomainError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Polynomial bridge

inline bool is_polynomial(const Expr& e)
{
    switch (e.kind()) {
    case NodeKind::Const:
    case NodeKind::Var:
        return true;
    case NodeKind::Neg:
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::IntPow: {
        for (std::size_t i = 0; i < e.arity(); ++i)
            if (!is_polynomial(e.child(i)))
                return false;
        return true;
    }
    default:
        return false;
    }
}

inline BiPoly to_bipoly(const Expr& e)
{
    switch (e.kind()) {
    case NodeKind::Const:
        return BiPoly::constant(e.value());
    case NodeKind::Var:
        return e.axis() == Axis::X ? BiPoly::x() : BiPoly::y();
    case NodeKind::Neg:
        return -to_bipoly(e.child(0));
    case NodeKind::Add:
        return to_bipoly(e.child(0)) + to_bipoly(e.child(1));
    case NodeKind::Sub:
        return to_bipoly(e.child(0)) - to_bipoly(e.child(1));
    case NodeKind::Mul:
        return to_bipoly(e.child(0)) * to_bipoly(e.child(1));
    case NodeKind::IntPow:
        return to_bipoly(e.child(0)).pow(static_cast<unsigned>(e.exponent()));
    default:
        throw NotPolynomial("expression contains a non-polynomial node");
    }
}

/// Exact restriction of a polynomial expression to a polynomial path:
/// phi(t) = f(x(t), y(t)).
inline UniPoly compose_path(const Expr& f, const UniPoly& x_of_t,
                            const UniPoly& y_of_t)
{
    return to_bipoly(f).compose(x_of_t, y_of_t);
}

} // namespace geosaddle
