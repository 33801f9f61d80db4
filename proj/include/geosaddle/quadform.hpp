// Binary quadratic forms Q(h) = a*h1^2 + 2b*h1*h2 + c*h2^2: evaluation,
// definiteness classification, and constructive witnesses of indefiniteness.
#pragma once

#include <geosaddle/errors.hpp>
#include <geosaddle/jet.hpp>
#include <geosaddle/vec2.hpp>

#include <cmath>

namespace geosaddle {

/// Values within this band of zero are treated as zero when classifying;
/// callers see such discriminant tests as inconclusive.
inline constexpr double kQuadFormZeroBand = 1e-12;

enum class Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    PositiveSemidefinite,
    NegativeSemidefinite,
    Indefinite,
    Zero
};

inline const char* to_string(Definiteness d)
{
    switch (d) {
    case Definiteness::PositiveDefinite: return "positive definite";
    case Definiteness::NegativeDefinite: return "negative definite";
    case Definiteness::PositiveSemidefinite: return "positive semidefinite";
    case Definiteness::NegativeSemidefinite: return "negative semidefinite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Zero: return "zero";
    }
    return "?";
}

struct QuadForm {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double operator()(Vec2 h) const
    {
        return a * h.x * h.x + 2.0 * b * h.x * h.y + c * h.y * h.y;
    }

    /// ac - b^2; recomputed on demand, never cached.
    double det() const { return a * c - b * b; }

    static QuadForm hessian_form(const Jet2& j)
    {
        return {j.fxx, j.fxy, j.fyy};
    }
};

inline double evaluate(const QuadForm& q, Vec2 h) { return q(h); }

inline Definiteness classify(const QuadForm& q,
                             double tol = kQuadFormZeroBand)
{
    const double det = q.det();
    if (det < -tol)
        return Definiteness::Indefinite;
    if (det > tol)
        return q.a > 0 ? Definiteness::PositiveDefinite
                       : Definiteness::NegativeDefinite;
    // |det| within the band: degenerate-or-nearly; decide by a, c signs.
    if (std::abs(q.a) <= tol && std::abs(q.b) <= tol && std::abs(q.c) <= tol)
        return Definiteness::Zero;
    if (std::min(q.a, q.c) < -tol && std::max(q.a, q.c) > tol)
        return Definiteness::Indefinite;
    return q.a + q.c > 0 ? Definiteness::PositiveSemidefinite
                         : Definiteness::NegativeSemidefinite;
}

struct IndefiniteWitness {
    Vec2 u_pos; // Q(u_pos) > 0
    Vec2 u_neg; // Q(u_neg) < 0
};

/// Constructive witnesses for ac - b^2 < 0, by the case split
///   a != 0        -> (1,0), (b,-a)
///   a == 0, c != 0 -> (0,1), (c,-b)
///   a == 0, c == 0 -> (1,1), (1,-1)
/// returned unnormalized, ordered by the sign of Q on them.
inline IndefiniteWitness indefinite_witness(const QuadForm& q,
                                            double tol = kQuadFormZeroBand)
{
    if (q.det() >= -tol)
        throw NotIndefinite("indefinite_witness requires ac - b^2 < 0");
    Vec2 first, second;
    if (std::abs(q.a) > tol) {
        first = {1, 0};
        second = {q.b, -q.a};
    } else if (std::abs(q.c) > tol) {
        first = {0, 1};
        second = {q.c, -q.b};
    } else {
        first = {1, 1};
        second = {1, -1};
    }
    if (q(first) > 0)
        return {first, second};
    return {second, first};
}

} // namespace geosaddle
