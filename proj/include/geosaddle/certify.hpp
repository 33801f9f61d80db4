// Classification engine: critical point location, the discriminant fast
// path (indefinite Hessian => strict saddle with straight-line witnesses),
// path-family search for saddle certificates in the degenerate cases,
// sign-based refutation of strictness, the classical-definition check, and
// certificate verification.
#pragma once

#include <geosaddle/bipoly.hpp>
#include <geosaddle/errors.hpp>
#include <geosaddle/field.hpp>
#include <geosaddle/jet.hpp>
#include <geosaddle/path.hpp>
#include <geosaddle/quadform.hpp>
#include <geosaddle/rational.hpp>
#include <geosaddle/vec2.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace geosaddle {

struct SearchConfig {
    int direction_count = 64; // line/parabola tangents at angles k*pi/K
    std::vector<double> parabola_coeffs = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
    double delta = 0.5;
    double gradient_tol = 1e-9;
    double transversal_tol = 1e-9;
    double newton_tol = 1e-9;
    // For polynomial fields, also try tangents where the lowest homogeneous
    // part vanishes on the unit circle; only parabolas bending off such a
    // tangent can pick up extremum behavior when the leading form is odd.
    bool refine_zero_directions = true;
};

enum class EvidenceGrade { Exact, Sampled };

inline const char* to_string(EvidenceGrade g)
{
    return g == EvidenceGrade::Exact ? "exact" : "sampled";
}

struct SaddleCertificate {
    Vec2 point;
    ParametricPath path_max;
    ParametricPath path_min;
    ExtremumReport report_max;
    ExtremumReport report_min;
    double cross = 0.0; // |gamma_max'(0) x gamma_min'(0)|
    bool strict = true;
    EvidenceGrade grade = EvidenceGrade::Sampled;
};

struct CriticalPoint {
    Vec2 location;
    double gradient_norm = 0.0;
    double discriminant = 0.0;
    QuadForm hessian;
};

struct SearchSummary {
    int lines_tried = 0;
    int parabolas_tried = 0;
    int refined_directions = 0;
    int strict_max_found = 0;
    int strict_min_found = 0;
    int constant_found = 0;
};

enum class Verdict {
    StrictSaddle,
    LocalMin,
    LocalMax,
    NotCritical,
    RefutedSaddle,
    ClassicalSaddleOnly,
    Unknown
};

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::StrictSaddle: return "strict saddle";
    case Verdict::LocalMin: return "local min";
    case Verdict::LocalMax: return "local max";
    case Verdict::NotCritical: return "not critical";
    case Verdict::RefutedSaddle: return "refuted saddle";
    case Verdict::ClassicalSaddleOnly: return "classical saddle only";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

enum class RefutationReason { SignSemidefiniteNeighborhood, NotCritical };

struct SignRefutation {
    EvidenceGrade grade = EvidenceGrade::Sampled;
    bool nonnegative = true; // f - f(p) >= 0 (else <= 0) near p
};

enum class ClassicalOutcome {
    ClassicalSaddle,
    LocalExtremum,
    Inconclusive,
    NotCritical,
    NotApplicable
};

struct ClassicalEvidence {
    ClassicalOutcome outcome = ClassicalOutcome::NotApplicable;
    std::vector<double> radii;
};

struct Classification {
    Verdict verdict = Verdict::Unknown;
    std::optional<SaddleCertificate> certificate;
    std::optional<Vec2> gradient;
    std::optional<double> discriminant_value;
    std::optional<RefutationReason> refutation;
    std::optional<EvidenceGrade> refutation_grade;
    std::optional<ClassicalEvidence> classical;
    SearchSummary search;
};

// ---------------------------------------------------------------------------
// Exact critical anchors

namespace detail {

/// Best rational approximation with denominator <= max_den (continued
/// fractions).
inline Rational rationalize(double x, std::int64_t max_den)
{
    Rational target = rational_from_double(x);
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational rest = target;
    for (int i = 0; i < 64; ++i) {
        BigInt a = numerator(rest) / denominator(rest);
        if (rest < 0 && a * denominator(rest) != numerator(rest))
            a -= 1; // floor for negatives
        BigInt p2 = a * p1 + p0;
        BigInt q2 = a * q1 + q0;
        if (q2 > max_den)
            break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Rational frac = rest - Rational(a);
        if (frac == 0)
            break;
        rest = Rational(1) / frac;
    }
    if (q1 == 0)
        return target;
    return Rational(p1, q1);
}

/// Candidate exact coordinates near x: zero, nearest integer, small
/// fraction, and the dyadic value itself.
inline std::vector<Rational> snap_candidates(double x)
{
    std::vector<Rational> out;
    auto push = [&](Rational r) {
        double err = std::abs(to_double(r) - x);
        if (err <= 1e-6 * std::max(1.0, std::abs(x))
            && std::find(out.begin(), out.end(), r) == out.end())
            out.push_back(std::move(r));
    };
    push(Rational(0));
    push(Rational(BigInt(std::llround(x))));
    push(rationalize(x, 1'000'000));
    push(rational_from_double(x));
    return out;
}

/// Nearby point with exactly vanishing gradient of the polynomial form, if
/// one of the snap candidates has it. Gives the exact classification route
/// an exact critical anchor, so the linear term of phi - phi(0) vanishes
/// identically instead of carrying the Newton residue.
inline std::optional<RatVec2> snap_to_exact_critical(const BiPoly& poly,
                                                     Vec2 p)
{
    const BiPoly fx = poly.derivative_x();
    const BiPoly fy = poly.derivative_y();
    for (const Rational& qx : snap_candidates(p.x))
        for (const Rational& qy : snap_candidates(p.y))
            if (fx.eval(qx, qy) == 0 && fy.eval(qx, qy) == 0)
                return RatVec2{qx, qy};
    return std::nullopt;
}

/// Anchor used for engine-built paths: the exactly-critical snap when the
/// field is polynomial and one exists, otherwise the dyadic input point.
inline RatVec2 path_anchor(const Field& f, Vec2 p)
{
    if (const BiPoly* poly = f.polynomial())
        if (auto snapped = snap_to_exact_critical(*poly, p))
            return *snapped;
    return {rational_from_double(p.x), rational_from_double(p.y)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Critical point location

inline std::vector<CriticalPoint>
find_critical_points(const Field& f, const Region& region, int grid_n = 9,
                     double newton_tol = 1e-9)
{
    std::vector<Vec2> found;
    const double slack = 1e-9 * std::max(region.width(), region.height());
    const double max_step = std::hypot(region.width(), region.height());

    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            Vec2 q{region.xmin
                       + region.width() * (grid_n == 1 ? 0.5 : double(i) / (grid_n - 1)),
                   region.ymin
                       + region.height() * (grid_n == 1 ? 0.5 : double(j) / (grid_n - 1))};
            bool converged = false;
            for (int iter = 0; iter < 50; ++iter) {
                auto jet = f.jet(q);
                if (!jet)
                    break;
                Vec2 g = jet->gradient();
                // Keep polishing below the tolerance: along degenerate
                // directions the gradient passes the target long before the
                // iterate settles, which would leave near-duplicate points.
                converged = jet->gradient_norm() < newton_tol;
                const double a = jet->fxx, b = jet->fxy, c = jet->fyy;
                const double det = a * c - b * b;
                const double scale = a * a + 2 * b * b + c * c;
                Vec2 step;
                if (std::abs(det) > 1e-14 * (1.0 + scale)) {
                    step = {-(c * g.x - b * g.y) / det,
                            -(a * g.y - b * g.x) / det};
                } else {
                    // Damped least-squares step on |grad f|^2; keeps moving
                    // where the Hessian is singular.
                    Vec2 hg{a * g.x + b * g.y, b * g.x + c * g.y};
                    double mu = 1e-12 * (1.0 + scale);
                    double haa = a * a + b * b + mu;
                    double hbb = a * b + b * c;
                    double hcc = b * b + c * c + mu;
                    double d2 = haa * hcc - hbb * hbb;
                    step = {-(hcc * hg.x - hbb * hg.y) / d2,
                            -(haa * hg.y - hbb * hg.x) / d2};
                }
                double len = norm(step);
                if (!std::isfinite(len) || len < 1e-15)
                    break;
                if (len > max_step)
                    step = (max_step / len) * step;
                q = q + step;
                if (!region.contains(q, 0.5 * max_step))
                    break;
            }
            {
                auto jet = f.jet(q);
                converged = jet && jet->gradient_norm() < newton_tol;
            }
            if (!converged || !region.contains(q, slack))
                continue;
            bool duplicate = false;
            for (Vec2 seen : found)
                if (norm(q - seen) < 1e-6) {
                    duplicate = true;
                    break;
                }
            if (!duplicate)
                found.push_back(q);
        }
    }

    std::sort(found.begin(), found.end(), [](Vec2 a, Vec2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    std::vector<CriticalPoint> out;
    for (Vec2 q : found) {
        auto jet = f.jet(q);
        if (!jet)
            continue;
        out.push_back({q, jet->gradient_norm(),
                       jet->fxx * jet->fyy - jet->fxy * jet->fxy,
                       QuadForm::hessian_form(*jet)});
    }
    return out;
}

inline std::vector<CriticalPoint>
find_critical_points(const Expr& f, const Region& region, int grid_n = 9,
                     double newton_tol = 1e-9)
{
    return find_critical_points(ExprField(f), region, grid_n, newton_tol);
}

// ---------------------------------------------------------------------------
// Discriminant test

struct DiscriminantResult {
    enum class Kind {
        StrictSaddle,
        LocalMin,
        LocalMax,
        Inconclusive,
        NotCritical
    } kind = Kind::Inconclusive;
    double discriminant = 0.0;
    Vec2 gradient;
    std::optional<SaddleCertificate> certificate;
};

inline const char* to_string(DiscriminantResult::Kind k)
{
    switch (k) {
    case DiscriminantResult::Kind::StrictSaddle: return "strict saddle";
    case DiscriminantResult::Kind::LocalMin: return "local min";
    case DiscriminantResult::Kind::LocalMax: return "local max";
    case DiscriminantResult::Kind::Inconclusive: return "inconclusive";
    case DiscriminantResult::Kind::NotCritical: return "not critical";
    }
    return "?";
}

namespace detail {

inline std::optional<SaddleCertificate>
assemble_certificate(Vec2 p, const ParametricPath& max_path,
                     const ParametricPath& min_path,
                     const ExtremumReport& max_rep,
                     const ExtremumReport& min_rep, double transversal_tol)
{
    Vec2 d1 = max_path.tangent();
    Vec2 d2 = min_path.tangent();
    if (std::abs(cross(d1, d2)) <= transversal_tol * norm(d1) * norm(d2))
        return std::nullopt;
    const bool max_ok = max_rep.kind == ExtremumKind::StrictMax
                        || max_rep.kind == ExtremumKind::Max
                        || max_rep.kind == ExtremumKind::Constant;
    const bool min_ok = min_rep.kind == ExtremumKind::StrictMin
                        || min_rep.kind == ExtremumKind::Min
                        || min_rep.kind == ExtremumKind::Constant;
    if (!max_ok || !min_ok)
        return std::nullopt;
    SaddleCertificate cert{p,
                           max_path.with_halfwidth(std::min(
                               max_path.halfwidth(), max_rep.verified_delta)),
                           min_path.with_halfwidth(std::min(
                               min_path.halfwidth(), min_rep.verified_delta)),
                           max_rep,
                           min_rep,
                           std::abs(cross(d1, d2)),
                           max_rep.kind == ExtremumKind::StrictMax
                               && min_rep.kind == ExtremumKind::StrictMin,
                           max_rep.method == ClassifyMethod::ExactPolynomial
                                   && min_rep.method
                                          == ClassifyMethod::ExactPolynomial
                               ? EvidenceGrade::Exact
                               : EvidenceGrade::Sampled};
    return cert;
}

inline DiscriminantResult discriminant_test_at(const Field& f, Vec2 p,
                                               const RatVec2& anchor,
                                               const SearchConfig& cfg)
{
    auto jet = f.jet(p);
    if (!jet)
        throw NondifferentiablePoint(
            "discriminant test requires second-order data");

    DiscriminantResult res;
    res.gradient = jet->gradient();
    res.discriminant = jet->fxx * jet->fyy - jet->fxy * jet->fxy;
    if (jet->gradient_norm() >= cfg.gradient_tol) {
        res.kind = DiscriminantResult::Kind::NotCritical;
        return res;
    }
    if (res.discriminant < -kQuadFormZeroBand) {
        QuadForm q = QuadForm::hessian_form(*jet);
        IndefiniteWitness w = indefinite_witness(q);
        // Unit-scaled straight-line witnesses through p.
        ParametricPath max_path = ParametricPath::line(
            anchor, normalized(w.u_neg), cfg.delta, DataGrade::Exact);
        ParametricPath min_path = ParametricPath::line(
            anchor, normalized(w.u_pos), cfg.delta, DataGrade::Exact);
        ExtremumReport max_rep = classify_along(f, max_path);
        ExtremumReport min_rep = classify_along(f, min_path);
        auto cert = assemble_certificate(p, max_path, min_path, max_rep,
                                         min_rep, cfg.transversal_tol);
        if (cert && cert->strict) {
            res.kind = DiscriminantResult::Kind::StrictSaddle;
            res.certificate = std::move(cert);
        } else {
            res.kind = DiscriminantResult::Kind::Inconclusive;
        }
        return res;
    }
    if (res.discriminant > kQuadFormZeroBand) {
        res.kind = jet->fxx > 0 ? DiscriminantResult::Kind::LocalMin
                                : DiscriminantResult::Kind::LocalMax;
        return res;
    }
    res.kind = DiscriminantResult::Kind::Inconclusive;
    return res;
}

} // namespace detail

inline DiscriminantResult discriminant_test(const Field& f, Vec2 p,
                                            const SearchConfig& cfg = {})
{
    return detail::discriminant_test_at(f, p, detail::path_anchor(f, p), cfg);
}

inline DiscriminantResult discriminant_test(const Expr& f, Vec2 p,
                                            const SearchConfig& cfg = {})
{
    return discriminant_test(ExprField(f), p, cfg);
}

// ---------------------------------------------------------------------------
// Path-family search

namespace detail {

inline Vec2 grid_direction(int k, int K)
{
    if (4 * k == 0)
        return {1, 0};
    if (4 * k == K)
        return {1, 1};
    if (4 * k == 2 * K)
        return {0, 1};
    if (4 * k == 3 * K)
        return {-1, 1};
    const double theta = static_cast<double>(k) * std::numbers::pi / K;
    return {std::cos(theta), std::sin(theta)};
}

/// Tangent angles in [0, pi) where the lowest homogeneous part of the
/// recentered polynomial vanishes on the unit circle (sign-change zeros,
/// refined by bisection).
inline std::vector<double> zero_direction_angles(const BiPoly& poly,
                                                 const RatVec2& anchor)
{
    BiPoly shifted = poly.recentered(anchor.first, anchor.second);
    BiPoly lead = (shifted - BiPoly::constant(shifted.eval(
                      Rational(0), Rational(0))))
                      .lowest_homogeneous_part();
    if (lead.is_zero())
        return {};
    auto g = [&](double theta) {
        return lead.eval(std::cos(theta), std::sin(theta));
    };
    constexpr int kScan = 1024;
    std::vector<double> zeros;
    double prev = g(0.0);
    for (int i = 1; i <= kScan; ++i) {
        double theta = std::numbers::pi * i / kScan;
        double cur = g(theta);
        if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) {
            double lo = std::numbers::pi * (i - 1) / kScan, hi = theta;
            double glo = prev;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                double gm = g(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((glo < 0) == (gm < 0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return zeros;
}

struct SearchCandidate {
    ParametricPath path;
    ExtremumReport report;
    int kind_rank;  // 0 line, 1 parabola
    int index;      // enumeration order
};

} // namespace detail

inline std::optional<SaddleCertificate>
search_saddle_paths(const Field& f, Vec2 p, const SearchConfig& cfg,
                    SearchSummary* summary_out = nullptr)
{
    const RatVec2 anchor = detail::path_anchor(f, p);
    const int K = std::max(cfg.direction_count, 1);
    SearchSummary summary;

    // For polynomial fields, the lowest term of phi - phi(0) along any path
    // with tangent u is exactly (d, P_d(u)) whenever the lowest homogeneous
    // part P_d does not vanish at u; such candidates classify without
    // composing the full restriction. The finally selected pair is always
    // re-classified in full.
    std::optional<BiPoly> lead;
    int lead_degree = 0;
    if (const BiPoly* poly = f.polynomial()) {
        BiPoly shifted = poly->recentered(anchor.first, anchor.second);
        BiPoly g = shifted
                   - BiPoly::constant(shifted.eval(Rational(0), Rational(0)));
        if (!g.is_zero()) {
            lead = g.lowest_homogeneous_part();
            lead_degree = lead->total_degree();
        }
    }

    std::vector<detail::SearchCandidate> maxima, minima, constants;
    int index = 0;
    auto consider = [&](ParametricPath path, int kind_rank) {
        ExtremumReport rep;
        bool classified = false;
        if (lead && path.data_grade() == DataGrade::Exact) {
            Rational c = lead->eval(path.x_poly().coeff(1),
                                    path.y_poly().coeff(1));
            if (c != 0) {
                rep.method = ClassifyMethod::ExactPolynomial;
                rep.lowest_degree = lead_degree;
                rep.coeff_sign = sign(c);
                rep.strength =
                    to_double(abs(c))
                    / std::pow(norm(path.tangent()),
                               std::min(lead_degree, 64));
                rep.kind = lead_degree % 2 == 1 ? ExtremumKind::NoExtremum
                           : c > 0             ? ExtremumKind::StrictMin
                                               : ExtremumKind::StrictMax;
                classified = true;
            }
        }
        if (!classified)
            rep = classify_along(f, path);
        detail::SearchCandidate cand{std::move(path), rep, kind_rank, index++};
        switch (rep.kind) {
        case ExtremumKind::StrictMax:
            ++summary.strict_max_found;
            maxima.push_back(std::move(cand));
            break;
        case ExtremumKind::StrictMin:
            ++summary.strict_min_found;
            minima.push_back(std::move(cand));
            break;
        case ExtremumKind::Constant:
            ++summary.constant_found;
            constants.push_back(std::move(cand));
            break;
        default:
            break;
        }
    };

    for (int k = 0; k < K; ++k) {
        consider(ParametricPath::line(anchor, detail::grid_direction(k, K),
                                      cfg.delta, DataGrade::Exact),
                 0);
        ++summary.lines_tried;
    }
    for (int k = 0; k < K; ++k) {
        Vec2 u = detail::grid_direction(k, K);
        Vec2 w = perp(u);
        for (double s : cfg.parabola_coeffs) {
            for (double signed_s : {s, -s}) {
                consider(ParametricPath::parabola(anchor, u, signed_s * w,
                                                  cfg.delta, DataGrade::Exact),
                         1);
                ++summary.parabolas_tried;
            }
        }
    }

    if (cfg.refine_zero_directions && f.polynomial()) {
        std::vector<double> angles =
            detail::zero_direction_angles(*f.polynomial(), anchor);
        for (double theta : angles) {
            Vec2 u{std::cos(theta), std::sin(theta)};
            // Grid directions already cover this tangent at exact grade.
            bool near_grid = false;
            for (int k = 0; k < K; ++k) {
                Vec2 g = detail::grid_direction(k, K);
                if (std::abs(cross(g, u)) < 1e-9 * norm(g))
                    near_grid = true;
            }
            if (near_grid)
                continue;
            ++summary.refined_directions;
            consider(ParametricPath::line(anchor, u, cfg.delta,
                                          DataGrade::Approximate),
                     0);
            ++summary.lines_tried;
            Vec2 w = perp(u);
            for (double s : cfg.parabola_coeffs) {
                for (double signed_s : {s, -s}) {
                    consider(ParametricPath::parabola(anchor, u, signed_s * w,
                                                      cfg.delta,
                                                      DataGrade::Approximate),
                             1);
                    ++summary.parabolas_tried;
                }
            }
        }
    }

    if (summary_out)
        *summary_out = summary;

    // Deterministic pair selection: better evidence grade first, lines over
    // parabolas, then the strongest normalized leading behavior (so the
    // steepest witnesses win), with enumeration order as the final tie
    // breaker. Strict pairs outrank pairs that lean on a constant
    // (non-strict) side.
    auto grade_rank = [](const detail::SearchCandidate& c) {
        return c.report.method == ClassifyMethod::ExactPolynomial ? 0 : 1;
    };
    auto candidate_order = [&](const detail::SearchCandidate& a,
                               const detail::SearchCandidate& b) {
        return std::tuple(grade_rank(a), a.kind_rank, -a.report.strength,
                          a.index)
               < std::tuple(grade_rank(b), b.kind_rank, -b.report.strength,
                            b.index);
    };
    std::sort(maxima.begin(), maxima.end(), candidate_order);
    std::sort(minima.begin(), minima.end(), candidate_order);
    std::sort(constants.begin(), constants.end(), candidate_order);

    using PairRank = std::tuple<int, int, int, std::size_t, std::size_t>;
    const detail::SearchCandidate* best_max = nullptr;
    const detail::SearchCandidate* best_min = nullptr;
    PairRank best_rank{};
    auto try_pair = [&](const detail::SearchCandidate& mx, std::size_t i,
                        const detail::SearchCandidate& mn, std::size_t j,
                        bool strict_pair) {
        PairRank rank{strict_pair ? 0 : 1, grade_rank(mx) + grade_rank(mn),
                      mx.kind_rank + mn.kind_rank, i + j, i};
        if (best_max && rank >= best_rank)
            return;
        Vec2 d1 = mx.path.tangent();
        Vec2 d2 = mn.path.tangent();
        if (std::abs(cross(d1, d2))
            <= cfg.transversal_tol * norm(d1) * norm(d2))
            return;
        best_max = &mx;
        best_min = &mn;
        best_rank = rank;
    };

    for (std::size_t i = 0; i < maxima.size(); ++i)
        for (std::size_t j = 0; j < minima.size(); ++j)
            try_pair(maxima[i], i, minima[j], j, true);
    if (!best_max) {
        // Non-strict saddles: a locally-constant path provides both a (weak)
        // max and a (weak) min side.
        for (std::size_t i = 0; i < constants.size(); ++i) {
            for (std::size_t j = 0; j < minima.size(); ++j)
                try_pair(constants[i], i, minima[j], j, false);
            for (std::size_t j = 0; j < maxima.size(); ++j)
                try_pair(maxima[j], j, constants[i], i, false);
            for (std::size_t j = 0; j < constants.size(); ++j)
                if (i != j)
                    try_pair(constants[i], i, constants[j], j, false);
        }
    }
    if (!best_max)
        return std::nullopt;

    // Full classification of the winning pair backs the emitted reports:
    // the screening pass only pins kind, degree and strength.
    ExtremumReport max_rep = classify_along(f, best_max->path);
    ExtremumReport min_rep = classify_along(f, best_min->path);
    return detail::assemble_certificate(p, best_max->path, best_min->path,
                                        max_rep, min_rep,
                                        cfg.transversal_tol);
}

inline std::optional<SaddleCertificate>
search_saddle_paths(const Expr& f, Vec2 p, const SearchConfig& cfg = {},
                    SearchSummary* summary_out = nullptr)
{
    return search_saddle_paths(ExprField(f), p, cfg, summary_out);
}

// ---------------------------------------------------------------------------
// Classical-definition check and sign refutation

inline ClassicalEvidence
classical_saddle_check(const Field& f, Vec2 p,
                       const std::vector<double>& radii = {1e-1, 1e-2, 1e-3},
                       int samples_per_circle = 64,
                       double gradient_tol = 1e-9)
{
    ClassicalEvidence ev;
    ev.radii = radii;
    auto jet = f.jet(p);
    if (!jet) {
        ev.outcome = ClassicalOutcome::NotApplicable;
        return ev;
    }
    if (jet->gradient_norm() >= gradient_tol) {
        ev.outcome = ClassicalOutcome::NotCritical;
        return ev;
    }
    const double f0 = f.value(p);
    const double margin = 1e-14 * std::max(1.0, std::abs(f0));
    bool every_radius_mixed = true;
    bool any_above = false, any_below = false;
    for (double r : radii) {
        bool pos = false, neg = false;
        for (int i = 0; i < samples_per_circle; ++i) {
            double theta = 2.0 * std::numbers::pi * i / samples_per_circle;
            double d = f.value({p.x + r * std::cos(theta),
                                p.y + r * std::sin(theta)})
                       - f0;
            pos = pos || d > margin;
            neg = neg || d < -margin;
        }
        every_radius_mixed = every_radius_mixed && pos && neg;
        any_above = any_above || pos;
        any_below = any_below || neg;
    }
    if (every_radius_mixed)
        ev.outcome = ClassicalOutcome::ClassicalSaddle;
    else if (!any_above || !any_below)
        ev.outcome = ClassicalOutcome::LocalExtremum;
    else
        ev.outcome = ClassicalOutcome::Inconclusive;
    return ev;
}

inline ClassicalEvidence
classical_saddle_check(const Expr& f, Vec2 p,
                       const std::vector<double>& radii = {1e-1, 1e-2, 1e-3},
                       int samples_per_circle = 64, double gradient_tol = 1e-9)
{
    return classical_saddle_check(ExprField(f), p, radii, samples_per_circle,
                                  gradient_tol);
}

/// Refutes strictness when f - f(p) is sign-semidefinite near p: a
/// nonnegative function has no strict local maximum along any path through
/// p, hence no strict saddle (mirrored for nonpositive). Exact grade when
/// every term of the recentered polynomial has even exponents and one
/// coefficient sign; sampled polar-grid evidence otherwise.
inline std::optional<SignRefutation>
refute_strict_saddle_by_sign(const Field& f, Vec2 p,
                             const SearchConfig& cfg = {})
{
    if (const BiPoly* poly = f.polynomial()) {
        const RatVec2 anchor = detail::path_anchor(f, p);
        BiPoly shifted = poly->recentered(anchor.first, anchor.second);
        BiPoly g = shifted
                   - BiPoly::constant(shifted.eval(Rational(0), Rational(0)));
        if (!g.is_zero()) {
            bool all_even = true, all_pos = true, all_neg = true;
            for (const auto& [k, c] : g.terms()) {
                all_even = all_even && k.first % 2 == 0 && k.second % 2 == 0;
                all_pos = all_pos && c > 0;
                all_neg = all_neg && c < 0;
            }
            if (all_even && (all_pos || all_neg))
                return SignRefutation{EvidenceGrade::Exact, all_pos};
        } else {
            return SignRefutation{EvidenceGrade::Exact, true};
        }
    }

    const double f0 = f.value(p);
    const double margin = 1e-14 * std::max(1.0, std::abs(f0));
    bool nonneg = true, nonpos = true;
    for (int k = 0; k <= 6; ++k) {
        const double r = cfg.delta * std::ldexp(1.0, -k);
        for (int i = 0; i < 64; ++i) {
            double theta = 2.0 * std::numbers::pi * i / 64;
            double d = f.value({p.x + r * std::cos(theta),
                                p.y + r * std::sin(theta)})
                       - f0;
            nonneg = nonneg && d >= -margin;
            nonpos = nonpos && d <= margin;
            if (!nonneg && !nonpos)
                return std::nullopt;
        }
    }
    return SignRefutation{EvidenceGrade::Sampled, nonneg};
}

// ---------------------------------------------------------------------------
// Pipeline and verification

inline Classification classify_point(const Field& f, Vec2 p,
                                     const SearchConfig& cfg = {})
{
    Classification out;
    auto jet = f.jet(p);
    if (jet) {
        out.discriminant_value = jet->fxx * jet->fyy - jet->fxy * jet->fxy;
        if (jet->gradient_norm() >= cfg.gradient_tol) {
            out.verdict = Verdict::NotCritical;
            out.gradient = jet->gradient();
            return out;
        }
        DiscriminantResult dr =
            detail::discriminant_test_at(f, p, detail::path_anchor(f, p), cfg);
        switch (dr.kind) {
        case DiscriminantResult::Kind::StrictSaddle:
            out.verdict = Verdict::StrictSaddle;
            out.certificate = dr.certificate;
            return out;
        case DiscriminantResult::Kind::LocalMin:
            out.verdict = Verdict::LocalMin;
            return out;
        case DiscriminantResult::Kind::LocalMax:
            out.verdict = Verdict::LocalMax;
            return out;
        default:
            break;
        }
    }

    if (auto refutation = refute_strict_saddle_by_sign(f, p, cfg)) {
        out.verdict = Verdict::RefutedSaddle;
        out.refutation = RefutationReason::SignSemidefiniteNeighborhood;
        out.refutation_grade = refutation->grade;
        return out;
    }

    if (auto cert = search_saddle_paths(f, p, cfg, &out.search)) {
        // The headline verdict targets strict saddles. A pair leaning on a
        // locally-constant path is a saddle in the lax sense only; it is
        // attached for inspection but does not decide the verdict.
        out.certificate = std::move(cert);
        if (out.certificate->strict) {
            out.verdict = Verdict::StrictSaddle;
            return out;
        }
    }

    ClassicalEvidence classical = classical_saddle_check(
        f, p, {1e-1, 1e-2, 1e-3}, 64, cfg.gradient_tol);
    if (classical.outcome == ClassicalOutcome::ClassicalSaddle) {
        out.verdict = Verdict::ClassicalSaddleOnly;
        out.classical = classical;
        return out;
    }
    out.verdict = Verdict::Unknown;
    return out;
}

inline Classification classify_point(const Expr& f, Vec2 p,
                                     const SearchConfig& cfg = {})
{
    return classify_point(ExprField(f), p, cfg);
}

/// Re-checks everything a certificate claims: shared center, transversality,
/// the extremum kinds along both paths, and (where f is differentiable)
/// the vanishing gradient required of any saddle point.
inline bool verify_certificate(const Field& f, const SaddleCertificate& cert,
                               const SearchConfig& cfg = {})
{
    Vec2 c1 = cert.path_max.point_at(0.0);
    Vec2 c2 = cert.path_min.point_at(0.0);
    if (norm(c1 - c2) >= cfg.transversal_tol
        || norm(c1 - cert.point) >= 1e-6)
        return false;
    try {
        if (!transversal(cert.path_max, cert.path_min, cfg.transversal_tol))
            return false;
    } catch (const DifferentCenters&) {
        return false;
    }
    ExtremumReport max_rep = classify_along(f, cert.path_max);
    ExtremumReport min_rep = classify_along(f, cert.path_min);
    const bool max_ok =
        cert.strict ? max_rep.kind == ExtremumKind::StrictMax
                    : max_rep.kind == ExtremumKind::StrictMax
                          || max_rep.kind == ExtremumKind::Max
                          || max_rep.kind == ExtremumKind::Constant;
    const bool min_ok =
        cert.strict ? min_rep.kind == ExtremumKind::StrictMin
                    : min_rep.kind == ExtremumKind::StrictMin
                          || min_rep.kind == ExtremumKind::Min
                          || min_rep.kind == ExtremumKind::Constant;
    if (!max_ok || !min_ok)
        return false;
    if (auto jet = f.jet(cert.point))
        if (jet->gradient_norm() >= cfg.gradient_tol)
            return false;
    return true;
}

inline bool verify_certificate(const Expr& f, const SaddleCertificate& cert,
                               const SearchConfig& cfg = {})
{
    return verify_certificate(ExprField(f), cert, cfg);
}

} // namespace geosaddle
