// Second-order forward-mode differentiation: propagates value, gradient and
// Hessian through an expression in one pass. Mixed partials are symmetric for
// the supported node set, so one fxy entry is stored.
#pragma once

#include <geosaddle/errors.hpp>
#include <geosaddle/expr.hpp>
#include <geosaddle/vec2.hpp>

#include <cmath>

namespace geosaddle {

/// Abs/Min/Max refuse to pick a branch when the discriminating argument is
/// within this band of the kink; no derivative is fabricated there.
inline constexpr double kKinkTolerance = 1e-12;

struct Jet2 {
    double value = 0.0;
    double fx = 0.0;
    double fy = 0.0;
    double fxx = 0.0;
    double fxy = 0.0;
    double fyy = 0.0;

    Vec2 gradient() const { return {fx, fy}; }
    double gradient_norm() const { return std::hypot(fx, fy); }

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 seed_x(double v) { return {v, 1, 0, 0, 0, 0}; }
    static Jet2 seed_y(double v) { return {v, 0, 1, 0, 0, 0}; }

    friend Jet2 operator+(const Jet2& a, const Jet2& b)
    {
        return {a.value + b.value, a.fx + b.fx,   a.fy + b.fy,
                a.fxx + b.fxx,     a.fxy + b.fxy, a.fyy + b.fyy};
    }

    friend Jet2 operator-(const Jet2& a, const Jet2& b)
    {
        return {a.value - b.value, a.fx - b.fx,   a.fy - b.fy,
                a.fxx - b.fxx,     a.fxy - b.fxy, a.fyy - b.fyy};
    }

    friend Jet2 operator-(const Jet2& a)
    {
        return {-a.value, -a.fx, -a.fy, -a.fxx, -a.fxy, -a.fyy};
    }

    friend Jet2 operator*(const Jet2& a, const Jet2& b)
    {
        Jet2 r;
        r.value = a.value * b.value;
        r.fx = a.fx * b.value + a.value * b.fx;
        r.fy = a.fy * b.value + a.value * b.fy;
        r.fxx = a.fxx * b.value + 2.0 * a.fx * b.fx + a.value * b.fxx;
        r.fyy = a.fyy * b.value + 2.0 * a.fy * b.fy + a.value * b.fyy;
        r.fxy = a.fxy * b.value + a.fx * b.fy + a.fy * b.fx + a.value * b.fxy;
        return r;
    }

    friend Jet2 operator*(double s, const Jet2& a)
    {
        return {s * a.value, s * a.fx,  s * a.fy,
                s * a.fxx,   s * a.fxy, s * a.fyy};
    }
};

namespace detail {

/// Chain rule for a smooth univariate g applied to a jet.
inline Jet2 jet_chain(const Jet2& u, double g, double dg, double ddg)
{
    Jet2 r;
    r.value = g;
    r.fx = dg * u.fx;
    r.fy = dg * u.fy;
    r.fxx = ddg * u.fx * u.fx + dg * u.fxx;
    r.fyy = ddg * u.fy * u.fy + dg * u.fyy;
    r.fxy = ddg * u.fx * u.fy + dg * u.fxy;
    return r;
}

inline Jet2 jet_eval(const Expr& e, Vec2 p)
{
    switch (e.kind()) {
    case NodeKind::Const:
        return Jet2::constant(to_double(e.value()));
    case NodeKind::Var:
        return e.axis() == Axis::X ? Jet2::seed_x(p.x) : Jet2::seed_y(p.y);
    case NodeKind::Neg:
        return -jet_eval(e.child(0), p);
    case NodeKind::Add:
        return jet_eval(e.child(0), p) + jet_eval(e.child(1), p);
    case NodeKind::Sub:
        return jet_eval(e.child(0), p) - jet_eval(e.child(1), p);
    case NodeKind::Mul:
        return jet_eval(e.child(0), p) * jet_eval(e.child(1), p);
    case NodeKind::Div: {
        Jet2 u = jet_eval(e.child(0), p);
        Jet2 v = jet_eval(e.child(1), p);
        if (v.value == 0.0)
            throw DomainError("division by zero");
        double inv = 1.0 / v.value;
        // 1/v via chain rule, then the product rule.
        Jet2 r = jet_chain(v, inv, -inv * inv, 2.0 * inv * inv * inv);
        return u * r;
    }
    case NodeKind::IntPow: {
        Jet2 base = jet_eval(e.child(0), p);
        Jet2 acc = Jet2::constant(1.0);
        for (int i = 0; i < e.exponent(); ++i)
            acc = acc * base;
        return acc;
    }
    case NodeKind::Abs: {
        Jet2 u = jet_eval(e.child(0), p);
        if (std::abs(u.value) <= kKinkTolerance)
            throw NondifferentiablePoint("abs argument at its kink");
        return u.value > 0 ? u : -u;
    }
    case NodeKind::Min:
    case NodeKind::Max: {
        Jet2 u = jet_eval(e.child(0), p);
        Jet2 v = jet_eval(e.child(1), p);
        double d = u.value - v.value;
        if (std::abs(d) <= kKinkTolerance)
            throw NondifferentiablePoint("min/max arguments at their kink");
        if (e.kind() == NodeKind::Min)
            return d < 0 ? u : v;
        return d > 0 ? u : v;
    }
    case NodeKind::Sin: {
        Jet2 u = jet_eval(e.child(0), p);
        double s = std::sin(u.value), c = std::cos(u.value);
        return jet_chain(u, s, c, -s);
    }
    case NodeKind::Cos: {
        Jet2 u = jet_eval(e.child(0), p);
        double s = std::sin(u.value), c = std::cos(u.value);
        return jet_chain(u, c, -s, -c);
    }
    case NodeKind::Exp: {
        Jet2 u = jet_eval(e.child(0), p);
        double ex = std::exp(u.value);
        return jet_chain(u, ex, ex, ex);
    }
    }
    throw DomainError("corrupt expression node");
}

} // namespace detail

inline Jet2 eval_jet(const Expr& f, Vec2 p)
{
    Jet2 j = detail::jet_eval(f, p);
    if (!std::isfinite(j.value) || !std::isfinite(j.fx) || !std::isfinite(j.fy)
        || !std::isfinite(j.fxx) || !std::isfinite(j.fxy)
        || !std::isfinite(j.fyy))
        throw DomainError("non-finite derivative data");
    return j;
}

/// Delta f(p) = fxx*fyy - fxy^2.
inline double discriminant(const Expr& f, Vec2 p)
{
    Jet2 j = eval_jet(f, p);
    return j.fxx * j.fyy - j.fxy * j.fxy;
}

} // namespace geosaddle
