// Regular parametric paths through a point, transversality, and local
// extremum classification of a field restricted to a path.
//
// Paths are centered at t = 0 with symmetric domain [-delta, delta]. Every
// path keeps an exact univariate polynomial form of its coordinates, so
// regularity is decided exactly (Sturm count on the common zeros of the
// derivative) and polynomial fields restrict to exact univariate polynomials.
#pragma once

#include <geosaddle/errors.hpp>
#include <geosaddle/field.hpp>
#include <geosaddle/rational.hpp>
#include <geosaddle/unipoly.hpp>
#include <geosaddle/vec2.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geosaddle {

enum class PathKind { Line, Parabola, PolyPair };

/// Whether a path's stored coefficients are the intended exact values
/// (every double is a dyadic rational) or a floating approximation of
/// irrational targets. Approximate paths are classified by sampling only:
/// exact composition would expose the approximation residue, not the
/// intended geometry.
enum class DataGrade { Exact, Approximate };

/// A planar point with exact rational coordinates; used to anchor paths at
/// certified critical points that are not dyadic (e.g. 1/3).
using RatVec2 = std::pair<Rational, Rational>;

class ParametricPath {
public:
    static ParametricPath line(Vec2 p, Vec2 u, double delta,
                               DataGrade grade = DataGrade::Exact)
    {
        return line(RatVec2{rational_from_double(p.x),
                            rational_from_double(p.y)},
                    u, delta, grade);
    }

    static ParametricPath line(const RatVec2& p, Vec2 u, double delta,
                               DataGrade grade = DataGrade::Exact)
    {
        if (is_zero(u))
            throw ZeroDirection("line direction must be nonzero");
        ParametricPath path(PathKind::Line, p, u, Vec2{0, 0}, delta, grade);
        path.validate_regularity();
        return path;
    }

    static ParametricPath parabola(Vec2 p, Vec2 u, Vec2 v, double delta,
                                   DataGrade grade = DataGrade::Exact)
    {
        return parabola(RatVec2{rational_from_double(p.x),
                                rational_from_double(p.y)},
                        u, v, delta, grade);
    }

    static ParametricPath parabola(const RatVec2& p, Vec2 u, Vec2 v,
                                   double delta,
                                   DataGrade grade = DataGrade::Exact)
    {
        if (is_zero(u))
            throw ZeroDirection("parabola tangent must be nonzero");
        ParametricPath path(PathKind::Parabola, p, u, v, delta, grade);
        path.validate_regularity();
        return path;
    }

    static ParametricPath poly_pair(UniPoly x_of_t, UniPoly y_of_t,
                                    double delta)
    {
        ParametricPath path(std::move(x_of_t), std::move(y_of_t), delta);
        path.validate_regularity();
        return path;
    }

    PathKind kind() const { return kind_; }
    Vec2 center() const { return center_; }
    double halfwidth() const { return delta_; }
    DataGrade data_grade() const { return grade_; }
    Vec2 u() const { return u_; }
    Vec2 v() const { return v_; }
    const UniPoly& x_poly() const { return x_; }
    const UniPoly& y_poly() const { return y_; }

    Vec2 point_at(double t) const
    {
        switch (kind_) {
        case PathKind::Line:
            return center_ + t * u_;
        case PathKind::Parabola:
            return center_ + t * u_ + (t * t) * v_;
        case PathKind::PolyPair:
            return {x_.eval(t), y_.eval(t)};
        }
        return center_;
    }

    Vec2 derivative_at(double t) const
    {
        switch (kind_) {
        case PathKind::Line:
            return u_;
        case PathKind::Parabola:
            return u_ + (2.0 * t) * v_;
        case PathKind::PolyPair:
            return {dx_.eval(t), dy_.eval(t)};
        }
        return u_;
    }

    Vec2 tangent() const { return derivative_at(0.0); }

    /// The same trace with reversed parameter, gamma(-t).
    ParametricPath reversed() const
    {
        ParametricPath r = *this;
        r.u_ = -r.u_;
        r.x_ = flip_parameter(x_);
        r.y_ = flip_parameter(y_);
        r.dx_ = r.x_.derivative();
        r.dy_ = r.y_.derivative();
        return r;
    }

    /// Identical geometry, shrunk parameter domain.
    ParametricPath with_halfwidth(double delta) const
    {
        ParametricPath r = *this;
        r.delta_ = delta;
        return r;
    }

    std::string describe() const
    {
        switch (kind_) {
        case PathKind::Line:
            return "line";
        case PathKind::Parabola:
            return "parabola";
        case PathKind::PolyPair:
            return "polypair";
        }
        return "?";
    }

private:
    ParametricPath(PathKind kind, const RatVec2& p, Vec2 u, Vec2 v,
                   double delta, DataGrade grade)
        : kind_(kind),
          center_{to_double(p.first), to_double(p.second)},
          u_(u),
          v_(v),
          delta_(delta),
          grade_(grade)
    {
        if (!(delta > 0))
            throw std::invalid_argument("path halfwidth must be positive");
        auto coords = [kind](Rational c0, double c1, double c2) {
            return UniPoly({std::move(c0), rational_from_double(c1),
                            rational_from_double(
                                kind == PathKind::Parabola ? c2 : 0.0)});
        };
        x_ = coords(p.first, u.x, v.x);
        y_ = coords(p.second, u.y, v.y);
        dx_ = x_.derivative();
        dy_ = y_.derivative();
    }

    ParametricPath(UniPoly x, UniPoly y, double delta)
        : kind_(PathKind::PolyPair),
          x_(std::move(x)),
          y_(std::move(y)),
          delta_(delta),
          grade_(DataGrade::Exact)
    {
        if (!(delta > 0))
            throw std::invalid_argument("path halfwidth must be positive");
        dx_ = x_.derivative();
        dy_ = y_.derivative();
        center_ = {x_.eval(0.0), y_.eval(0.0)};
        u_ = {dx_.eval(0.0), dy_.eval(0.0)};
        v_ = {to_double(x_.coeff(2)), to_double(y_.coeff(2))};
    }

    // gamma'(t) != 0 on [-delta, delta], decided exactly: the derivative
    // vanishes exactly at common roots of x' and y', i.e. roots of their gcd.
    void validate_regularity() const
    {
        UniPoly g = poly_gcd(dx_, dy_);
        Rational d = rational_from_double(delta_);
        if (has_real_root_in(g, -d, d))
            throw NotRegular("path derivative vanishes on the domain");
    }

    static UniPoly flip_parameter(const UniPoly& p)
    {
        std::vector<Rational> c(p.coeffs());
        for (std::size_t k = 1; k < c.size(); k += 2)
            c[k] = -c[k];
        return UniPoly(std::move(c));
    }

    PathKind kind_ = PathKind::Line;
    Vec2 center_{};
    Vec2 u_{};
    Vec2 v_{};
    UniPoly x_, y_, dx_, dy_;
    double delta_ = 0.5;
    DataGrade grade_ = DataGrade::Exact;
};

inline ParametricPath make_line(Vec2 p, Vec2 u, double delta,
                                DataGrade grade = DataGrade::Exact)
{
    return ParametricPath::line(p, u, delta, grade);
}

inline ParametricPath make_parabola(Vec2 p, Vec2 u, Vec2 v, double delta,
                                    DataGrade grade = DataGrade::Exact)
{
    return ParametricPath::parabola(p, u, v, delta, grade);
}

inline ParametricPath make_poly_pair(UniPoly x_of_t, UniPoly y_of_t,
                                     double delta)
{
    return ParametricPath::poly_pair(std::move(x_of_t), std::move(y_of_t),
                                     delta);
}

inline Vec2 derivative_at(const ParametricPath& g, double t)
{
    return g.derivative_at(t);
}

/// Scale-invariant transversality test on the tangents at the shared center.
inline bool transversal(const ParametricPath& g1, const ParametricPath& g2,
                        double tol = 1e-9)
{
    if (norm(g1.center() - g2.center()) >= tol)
        throw DifferentCenters("paths have different centers");
    Vec2 d1 = g1.tangent();
    Vec2 d2 = g2.tangent();
    return std::abs(cross(d1, d2)) > tol * norm(d1) * norm(d2);
}

// ---------------------------------------------------------------------------
// Local extremum classification along a path

enum class ExtremumKind {
    StrictMax,
    StrictMin,
    Max,
    Min,
    NoExtremum,
    Constant,
    Inconclusive
};

inline const char* to_string(ExtremumKind k)
{
    switch (k) {
    case ExtremumKind::StrictMax: return "strict max";
    case ExtremumKind::StrictMin: return "strict min";
    case ExtremumKind::Max: return "max";
    case ExtremumKind::Min: return "min";
    case ExtremumKind::NoExtremum: return "no extremum";
    case ExtremumKind::Constant: return "constant";
    case ExtremumKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

enum class ClassifyMethod { ExactPolynomial, Sampled };

struct ExtremumReport {
    ExtremumKind kind = ExtremumKind::Inconclusive;
    ClassifyMethod method = ClassifyMethod::Sampled;

    /// Window half-width on which the verdict was actually established.
    double verified_delta = 0.0;

    /// Exact route: degree and coefficient sign of the lowest nonzero term
    /// of phi - phi(0). Sampled route: decay-rate estimate of the degree and
    /// the shared sign of the differences. -1 / 0 when not applicable.
    int lowest_degree = -1;
    int coeff_sign = 0;

    /// Sampled route evidence: number of radii with significant values on
    /// both sides, and the smallest ratio |difference| / noise-floor among
    /// the samples supporting the verdict.
    int significant_radii = 0;
    double worst_margin = 0.0;

    /// Magnitude of the leading behavior normalized by the tangent length,
    /// |c_d| / |gamma'(0)|^d; used to rank competing witness paths.
    double strength = 0.0;

    bool is_strict_max() const { return kind == ExtremumKind::StrictMax; }
    bool is_strict_min() const { return kind == ExtremumKind::StrictMin; }
};

namespace detail {

inline ExtremumReport classify_exact(const BiPoly& poly,
                                     const ParametricPath& path)
{
    ExtremumReport rep;
    rep.method = ClassifyMethod::ExactPolynomial;

    UniPoly phi = poly.compose(path.x_poly(), path.y_poly());
    UniPoly diff = phi - UniPoly::constant(phi.coeff(0));
    if (diff.is_zero()) {
        rep.kind = ExtremumKind::Constant;
        rep.verified_delta = path.halfwidth();
        return rep;
    }

    auto [deg, coeff] = *diff.lowest_term();
    rep.lowest_degree = static_cast<int>(deg);
    rep.coeff_sign = sign(coeff);
    rep.strength = to_double(abs(coeff))
                   / std::pow(norm(path.tangent()),
                              std::min<std::size_t>(deg, 64));
    if (deg % 2 == 1)
        rep.kind = ExtremumKind::NoExtremum;
    else
        rep.kind = coeff > 0 ? ExtremumKind::StrictMin : ExtremumKind::StrictMax;

    // Window on which the lowest term dominates the tail:
    // for |t| <= rho <= 1, sum_{j>d} |c_j| |t|^j <= |t|^{d+1} sum |c_j|
    // <= |t|^d |c_d| / 2 when rho <= |c_d| / (2 sum |c_j|).
    Rational tail_sum(0);
    for (std::size_t j = deg + 1; j < diff.coeffs().size(); ++j)
        tail_sum += abs(diff.coeff(j));
    double rho = path.halfwidth();
    if (tail_sum != 0)
        rho = std::min({rho, 1.0, to_double(abs(coeff) / (2 * tail_sum))});
    rep.verified_delta = rho;
    return rep;
}

struct SampleRow {
    double pos = 0.0;
    double neg = 0.0;
    double floor = 0.0;
    bool sig_pos = false;
    bool sig_neg = false;
};

inline int sign_of(double x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

inline ExtremumReport classify_sampled(const Field& f,
                                       const ParametricPath& path)
{
    constexpr int kDepth = 20;        // radii delta * 2^-k, k = 0..kDepth
    constexpr double kRel = 1e-14;    // noise floor relative to local scale
    constexpr int kMinEvidence = 4;   // both-sided significant radii required

    ExtremumReport rep;
    rep.method = ClassifyMethod::Sampled;

    const double phi0 = f.value(path.point_at(0.0));
    std::vector<SampleRow> rows(kDepth + 1);
    for (int k = 0; k <= kDepth; ++k) {
        const double t = path.halfwidth() * std::ldexp(1.0, -k);
        const double vp = f.value(path.point_at(t));
        const double vn = f.value(path.point_at(-t));
        SampleRow& row = rows[k];
        row.pos = vp - phi0;
        row.neg = vn - phi0;
        row.floor = kRel * std::max({std::abs(phi0), std::abs(vp),
                                     std::abs(vn), 1e-280});
        row.sig_pos = std::abs(row.pos) > row.floor;
        row.sig_neg = std::abs(row.neg) > row.floor;
    }

    // Smallest K such that on [K..kDepth] every significant difference has
    // the given sign; kDepth + 1 when even the deepest row violates it.
    auto tail_start = [&](int s, bool opposite) {
        int start = 0;
        for (int k = 0; k <= kDepth; ++k) {
            const int want_neg = opposite ? -s : s;
            const bool bad = (rows[k].sig_pos && sign_of(rows[k].pos) != s)
                             || (rows[k].sig_neg
                                 && sign_of(rows[k].neg) != want_neg);
            if (bad)
                start = k + 1;
        }
        return start;
    };
    auto evidence_in_tail = [&](int start) {
        int count = 0;
        double worst = 0.0;
        for (int k = start; k <= kDepth; ++k) {
            if (!(rows[k].sig_pos && rows[k].sig_neg))
                continue;
            ++count;
            double m = std::min(std::abs(rows[k].pos), std::abs(rows[k].neg))
                       / rows[k].floor;
            worst = count == 1 ? m : std::min(worst, m);
        }
        return std::make_pair(count, worst);
    };

    struct Candidate {
        int start;
        int count;
        double worst;
        int s;
        bool opposite;
    };
    std::vector<Candidate> candidates;
    for (int s : {+1, -1}) {
        for (bool opposite : {false, true}) {
            int start = tail_start(s, opposite);
            if (start > kDepth)
                continue;
            auto [count, worst] = evidence_in_tail(start);
            if (count >= kMinEvidence)
                candidates.push_back({start, count, worst, s, opposite});
        }
    }
    if (candidates.empty()) {
        rep.kind = ExtremumKind::Inconclusive;
        return rep;
    }
    // Prefer the verdict verified on the widest window; same-sign verdicts
    // (extrema) can never tie with opposite-sign ones on the same data.
    const Candidate& best = *std::min_element(
        candidates.begin(), candidates.end(),
        [](const Candidate& a, const Candidate& b) { return a.start < b.start; });

    rep.kind = best.opposite ? ExtremumKind::NoExtremum
               : best.s > 0 ? ExtremumKind::StrictMin
                            : ExtremumKind::StrictMax;
    rep.coeff_sign = best.opposite ? 0 : best.s;
    rep.verified_delta = path.halfwidth() * std::ldexp(1.0, -best.start);
    rep.significant_radii = best.count;
    rep.worst_margin = best.worst;

    // Decay-rate estimate of the lowest-order degree from the two largest
    // both-sided significant radii in the verdict window.
    int k1 = -1, k2 = -1;
    for (int k = best.start; k <= kDepth; ++k) {
        if (rows[k].sig_pos && rows[k].sig_neg) {
            if (k1 < 0)
                k1 = k;
            else if (k2 < 0) {
                k2 = k;
                break;
            }
        }
    }
    if (k2 > k1 && k1 >= 0) {
        double m1 = (std::abs(rows[k1].pos) + std::abs(rows[k1].neg)) / 2;
        double m2 = (std::abs(rows[k2].pos) + std::abs(rows[k2].neg)) / 2;
        if (m1 > 0 && m2 > 0) {
            double est = std::log2(m1 / m2) / (k2 - k1);
            rep.lowest_degree = static_cast<int>(
                std::clamp(std::lround(est), 0L, 64L));
            const double t1 = path.halfwidth() * std::ldexp(1.0, -k1);
            const int d = std::clamp(rep.lowest_degree, 1, 20);
            const double scale = std::pow(t1 * norm(path.tangent()), d);
            if (scale > 1e-300)
                rep.strength = m1 / scale;
        }
    }
    return rep;
}

} // namespace detail

/// Classify the local behavior of f along the path at its center.
/// Polynomial fields restricted to exact-data paths are classified exactly
/// by the lowest-order term of phi - phi(0); everything else is classified
/// by dyadic radius sampling with a scale-aware noise floor.
inline ExtremumReport classify_along(const Field& f, const ParametricPath& g,
                                     bool force_sampled = false)
{
    const BiPoly* poly = f.polynomial();
    if (!force_sampled && poly && g.data_grade() == DataGrade::Exact)
        return detail::classify_exact(*poly, g);
    return detail::classify_sampled(f, g);
}

inline ExtremumReport classify_along(const Expr& f, const ParametricPath& g,
                                     bool force_sampled = false)
{
    return classify_along(ExprField(f), g, force_sampled);
}

} // namespace geosaddle
