// Ground-truth catalog: every example family with its known classification,
// the witness paths where the construction is explicit, and parity rules for
// the monomial families. The acceptance suite diffs engine verdicts against
// this answer key.
#pragma once

#include <geosaddle/certify.hpp>
#include <geosaddle/expr.hpp>
#include <geosaddle/field.hpp>
#include <geosaddle/path.hpp>

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace geosaddle {

enum class ExpectedOutcome {
    StrictSaddle,
    NoSaddle,
    ClassicalSaddleOnly,
    NoCriticalPoint
};

inline const char* to_string(ExpectedOutcome e)
{
    switch (e) {
    case ExpectedOutcome::StrictSaddle: return "strict saddle";
    case ExpectedOutcome::NoSaddle: return "no saddle";
    case ExpectedOutcome::ClassicalSaddleOnly: return "classical saddle only";
    case ExpectedOutcome::NoCriticalPoint: return "no critical point";
    }
    return "?";
}

struct ReferencePath {
    ParametricPath path;
    ExtremumKind kind;
};

struct CatalogEntry {
    std::string name;
    std::string display;
    std::shared_ptr<const Field> field;
    Vec2 point{0, 0};
    ExpectedOutcome expected = ExpectedOutcome::NoSaddle;
    // Negative case whose nonexistence argument is not a sign argument; the
    // engine may report Unknown / classical-only instead of a refutation.
    bool allow_inconclusive = false;
    std::vector<ReferencePath> reference_paths;
};

// ---------------------------------------------------------------------------
// Parity rules for the monomial families

/// x^m * y^n at the origin.
inline ExpectedOutcome monomial_product_expected(int m, int n)
{
    return (m % 2 == 1 && n % 2 == 1) ? ExpectedOutcome::StrictSaddle
                                      : ExpectedOutcome::NoSaddle;
}

/// x^m - y^n at the origin.
inline ExpectedOutcome monomial_difference_expected(int m, int n)
{
    if (m == 1 || n == 1)
        return ExpectedOutcome::NoCriticalPoint;
    return (m % 2 == 0 && n % 2 == 0) ? ExpectedOutcome::StrictSaddle
                                      : ExpectedOutcome::NoSaddle;
}

/// x^m + y^n at the origin: never a saddle.
inline ExpectedOutcome monomial_sum_expected(int m, int n)
{
    if (m == 1 || n == 1)
        return ExpectedOutcome::NoCriticalPoint;
    return ExpectedOutcome::NoSaddle;
}

enum class ComplexPart { Re, Im };

/// Re/Im (x + iy)^n at the origin.
inline ExpectedOutcome complex_power_expected(int n, ComplexPart)
{
    if (n == 1)
        return ExpectedOutcome::NoCriticalPoint;
    return ExpectedOutcome::StrictSaddle;
}

// ---------------------------------------------------------------------------
// Expression builders

namespace detail {

inline Expr monomial_expr(long coeff, int dx, int dy)
{
    Expr e = Expr::constant(coeff);
    bool bare = coeff == 1;
    auto append = [&](Expr v, int d) {
        if (d == 0)
            return;
        Expr part = d == 1 ? v : pow(v, d);
        e = bare ? part : e * part;
        bare = false;
    };
    append(Expr::x(), dx);
    append(Expr::y(), dy);
    return e;
}

/// Re or Im of (x + iy)^n expanded by the binomial theorem.
inline Expr complex_power_expr(int n, ComplexPart part)
{
    // Binomial coefficients C(n, j).
    std::vector<long> binom(n + 1, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i - 1; j > 0; --j)
            binom[j] += binom[j - 1];

    Expr acc = Expr::constant(0L);
    bool first = true;
    for (int j = 0; j <= n; ++j) {
        const bool is_im = j % 2 == 1;
        if ((part == ComplexPart::Im) != is_im)
            continue;
        // i^j contributes +1, +i, -1, -i as j mod 4 = 0, 1, 2, 3.
        const long c = (j % 4 <= 1 ? 1 : -1) * binom[j];
        Expr term = monomial_expr(std::abs(c), n - j, j);
        if (first) {
            acc = c < 0 ? -term : term;
            first = false;
        } else {
            acc = c < 0 ? acc - term : acc + term;
        }
    }
    return acc;
}

inline bool near_integer_vec(Vec2 u)
{
    return u.x == std::floor(u.x) && u.y == std::floor(u.y);
}

inline DataGrade grade_for(Vec2 u, Vec2 v)
{
    return near_integer_vec(u) && near_integer_vec(v) ? DataGrade::Exact
                                                      : DataGrade::Approximate;
}

inline ReferencePath ref_line(Vec2 u, ExtremumKind kind, double delta = 0.5)
{
    return {ParametricPath::line(Vec2{0, 0}, u, delta,
                                 grade_for(u, Vec2{0, 0})),
            kind};
}

inline ReferencePath ref_parabola(Vec2 u, Vec2 v, ExtremumKind kind,
                                  double delta = 0.5)
{
    return {ParametricPath::parabola(Vec2{0, 0}, u, v, delta,
                                     grade_for(u, v)),
            kind};
}

/// The explicit parabolic witnesses for Re/Im (x+iy)^n with n odd: tangent
/// on a boundary of a sign sector, bending into the sector. The Im surface
/// is the Re surface rotated by pi/2n.
inline std::pair<ReferencePath, ReferencePath>
odd_complex_reference(int n, ComplexPart part)
{
    const double alpha = std::numbers::pi / (2 * n);
    const double rot = part == ComplexPart::Im ? alpha : 0.0;
    auto dir = [](double theta) {
        return Vec2{std::cos(theta), std::sin(theta)};
    };
    Vec2 u_min = dir(std::numbers::pi - alpha + rot);
    Vec2 v_min{u_min.y, -u_min.x}; // -i * u
    Vec2 u_max = dir(alpha + rot);
    Vec2 v_max{-u_max.y, u_max.x}; // +i * u
    return {ref_parabola(u_max, v_max, ExtremumKind::StrictMax),
            ref_parabola(u_min, v_min, ExtremumKind::StrictMin)};
}

inline std::shared_ptr<const Field> expr_field(const std::string& text)
{
    return std::make_shared<ExprField>(parse(text));
}

} // namespace detail

/// The piecewise nondifferentiable example: min(|x|, |y|) where xy >= 0 and
/// -min(|x|, |y|) where xy < 0. Lives outside the expression grammar, so it
/// gets a dedicated evaluator.
inline std::shared_ptr<const Field> min_abs_piecewise_field()
{
    return std::make_shared<CallableField>(
        [](Vec2 p) {
            double m = std::min(std::abs(p.x), std::abs(p.y));
            return p.x * p.y >= 0 ? m : -m;
        },
        "min(|x|,|y|) if x*y >= 0, -min(|x|,|y|) otherwise");
}

inline std::vector<CatalogEntry> catalog()
{
    using detail::expr_field;
    using detail::ref_line;
    using detail::ref_parabola;
    const double r3 = std::sqrt(3.0);

    std::vector<CatalogEntry> out;

    out.push_back({"hyperbolic-paraboloid",
                   "x*y",
                   expr_field("x*y"),
                   {0, 0},
                   ExpectedOutcome::StrictSaddle,
                   false,
                   {ref_line({1, -1}, ExtremumKind::StrictMax),
                    ref_line({1, 1}, ExtremumKind::StrictMin)}});

    out.push_back({"bilinear",
                   "(x + y)*(2*x + 3*y)",
                   expr_field("(x + y)*(2*x + 3*y)"),
                   {0, 0},
                   ExpectedOutcome::StrictSaddle,
                   false,
                   {ref_line({5, -4}, ExtremumKind::StrictMax),
                    ref_line({1, 0}, ExtremumKind::StrictMin)}});

    out.push_back({"monkey-saddle",
                   "x^3 - 3*x*y^2",
                   expr_field("x^3 - 3*x*y^2"),
                   {0, 0},
                   ExpectedOutcome::StrictSaddle,
                   false,
                   {ref_parabola({r3, 1}, {-1, r3}, ExtremumKind::StrictMax,
                                 1.0),
                    ref_parabola({-r3, 1}, {1, r3}, ExtremumKind::StrictMin,
                                 1.0)}});

    out.push_back({"fake-saddle",
                   "x^3",
                   expr_field("x^3"),
                   {0, 0},
                   ExpectedOutcome::ClassicalSaddleOnly,
                   false,
                   {}});

    out.push_back({"dog-saddle",
                   "x^3*y - x*y^3",
                   expr_field("x^3*y - x*y^3"),
                   {0, 0},
                   ExpectedOutcome::StrictSaddle,
                   false,
                   {ref_line({1, -0.5}, ExtremumKind::StrictMax),
                    ref_line({1, 0.5}, ExtremumKind::StrictMin)}});

    out.push_back({"min-abs",
                   "piecewise sign(x*y)*min(|x|,|y|)",
                   min_abs_piecewise_field(),
                   {0, 0},
                   ExpectedOutcome::StrictSaddle,
                   false,
                   {ref_line({1, -1}, ExtremumKind::StrictMax),
                    ref_line({1, 1}, ExtremumKind::StrictMin)}});

    out.push_back({"two-parabola",
                   "(y - x^2)*(y - 2*x^2)",
                   expr_field("(y - x^2)*(y - 2*x^2)"),
                   {0, 0},
                   ExpectedOutcome::StrictSaddle,
                   false,
                   {ref_parabola({1, 0}, {0, 1.5}, ExtremumKind::StrictMax),
                    ref_line({0, 1}, ExtremumKind::StrictMin)}});

    auto monomial_text = [](int m, int n, char op) {
        std::string sx = m == 1 ? "x" : "x^" + std::to_string(m);
        std::string sy = n == 1 ? "y" : "y^" + std::to_string(n);
        if (op == '*')
            return sx + "*" + sy;
        return sx + " " + op + " " + sy;
    };

    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            const bool both_odd = m % 2 == 1 && n % 2 == 1;
            const bool both_even = m % 2 == 0 && n % 2 == 0;

            CatalogEntry product;
            product.name = "product-" + std::to_string(m) + "-"
                           + std::to_string(n);
            product.display = monomial_text(m, n, '*');
            product.field = expr_field(product.display);
            product.expected = monomial_product_expected(m, n);
            product.allow_inconclusive = !both_odd && !both_even;
            if (both_odd) {
                product.reference_paths = {
                    ref_line({1, -1}, ExtremumKind::StrictMax),
                    ref_line({1, 1}, ExtremumKind::StrictMin)};
            }
            out.push_back(std::move(product));

            CatalogEntry diff;
            diff.name = "difference-" + std::to_string(m) + "-"
                        + std::to_string(n);
            diff.display = monomial_text(m, n, '-');
            diff.field = expr_field(diff.display);
            diff.expected = monomial_difference_expected(m, n);
            diff.allow_inconclusive =
                diff.expected == ExpectedOutcome::NoSaddle;
            if (diff.expected == ExpectedOutcome::StrictSaddle) {
                diff.reference_paths = {
                    ref_line({0, 1}, ExtremumKind::StrictMax),
                    ref_line({1, 0}, ExtremumKind::StrictMin)};
            }
            out.push_back(std::move(diff));

            CatalogEntry sum;
            sum.name = "sum-" + std::to_string(m) + "-" + std::to_string(n);
            sum.display = monomial_text(m, n, '+');
            sum.field = expr_field(sum.display);
            sum.expected = monomial_sum_expected(m, n);
            sum.allow_inconclusive = sum.expected == ExpectedOutcome::NoSaddle
                                     && !both_even;
            out.push_back(std::move(sum));
        }
    }

    for (int n = 1; n <= 6; ++n) {
        for (ComplexPart part : {ComplexPart::Re, ComplexPart::Im}) {
            CatalogEntry entry;
            entry.name = std::string(part == ComplexPart::Re ? "re" : "im")
                         + "-power-" + std::to_string(n);
            Expr e = detail::complex_power_expr(n, part);
            entry.display = to_string(e);
            entry.field = std::make_shared<ExprField>(e);
            entry.expected = complex_power_expected(n, part);
            if (n >= 2 && n % 2 == 1) {
                auto [mx, mn] = detail::odd_complex_reference(n, part);
                entry.reference_paths = {mx, mn};
            } else if (n >= 2) {
                // Even n: straight lines along a ridge and a valley of
                // r^n cos(n theta) (rotated by pi/2n for the Im surface).
                const double rot =
                    part == ComplexPart::Im ? std::numbers::pi / (2 * n) : 0.0;
                const double ridge = rot;
                const double valley = std::numbers::pi / n + rot;
                auto dir = [](double theta) {
                    return Vec2{std::cos(theta), std::sin(theta)};
                };
                entry.reference_paths = {
                    ref_line(dir(valley), ExtremumKind::StrictMax),
                    ref_line(dir(ridge), ExtremumKind::StrictMin)};
            }
            out.push_back(std::move(entry));
        }
    }

    return out;
}

// ---------------------------------------------------------------------------
// Verdict matching for the oracle suite

enum class MatchResult { Pass, PassInconclusive, Fail };

inline const char* to_string(MatchResult m)
{
    switch (m) {
    case MatchResult::Pass: return "PASS";
    case MatchResult::PassInconclusive: return "UNKNOWN-ALLOWED";
    case MatchResult::Fail: return "FAIL";
    }
    return "?";
}

inline MatchResult match_verdict(const CatalogEntry& entry,
                                 const Classification& result)
{
    switch (entry.expected) {
    case ExpectedOutcome::StrictSaddle:
        return result.verdict == Verdict::StrictSaddle ? MatchResult::Pass
                                                       : MatchResult::Fail;
    case ExpectedOutcome::NoCriticalPoint:
        return result.verdict == Verdict::NotCritical ? MatchResult::Pass
                                                      : MatchResult::Fail;
    case ExpectedOutcome::ClassicalSaddleOnly:
        return result.verdict == Verdict::ClassicalSaddleOnly
                   ? MatchResult::Pass
                   : MatchResult::Fail;
    case ExpectedOutcome::NoSaddle:
        switch (result.verdict) {
        case Verdict::RefutedSaddle:
        case Verdict::LocalMin:
        case Verdict::LocalMax:
            return MatchResult::Pass;
        case Verdict::Unknown:
        case Verdict::ClassicalSaddleOnly:
            return entry.allow_inconclusive ? MatchResult::PassInconclusive
                                            : MatchResult::Fail;
        default:
            return MatchResult::Fail;
        }
    }
    return MatchResult::Fail;
}

} // namespace geosaddle
