// Acceptance suite: thirteen end-to-end criteria, one pass/fail line each.
// Exit status is the number of failed criteria.
#include <geosaddle/geosaddle.hpp>
#include <geosaddle/json_io.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace geosaddle;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            detail << "    failed: " << what << "\n";
        }
    }
};

// Certificates emitted while running criteria 1-8, re-checked by criterion 9.
std::vector<std::pair<std::shared_ptr<const Field>, SaddleCertificate>>
    g_certificates;

void remember(const std::shared_ptr<const Field>& field,
              const Classification& result)
{
    if (result.certificate)
        g_certificates.push_back({field, *result.certificate});
}

std::shared_ptr<const Field> field_of(const std::string& text)
{
    return std::make_shared<ExprField>(parse(text));
}

// --------------------------------------------------------------------------

void criterion_1_discriminant_fast_path(Check& c)
{
    auto field = field_of("x*y");
    auto result = classify_point(*field, {0, 0});
    remember(field, result);
    c.require(result.verdict == Verdict::StrictSaddle, "x*y strict saddle");
    c.require(result.discriminant_value.has_value()
                  && std::abs(*result.discriminant_value + 1.0) <= 1e-12,
              "discriminant of x*y is -1 within 1e-12");
    if (result.certificate) {
        const auto& cert = *result.certificate;
        c.require(std::abs(cert.cross - 1.0) <= 1e-12,
                  "unit-scaled witness cross product is 1");
        c.require(cert.path_max.kind() == PathKind::Line
                      && cert.path_min.kind() == PathKind::Line,
                  "line witnesses");
    } else {
        c.require(false, "certificate emitted for x*y");
    }

    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> coeff(-9, 9);
    int done = 0;
    while (done < 100) {
        int a = coeff(rng), b = coeff(rng), cc = coeff(rng), d = coeff(rng);
        if (a * d - b * cc == 0)
            continue;
        ++done;
        std::ostringstream text;
        text << "(" << a << "*x + " << b << "*y)*(" << cc << "*x + " << d
             << "*y)";
        auto bilinear = field_of(text.str());
        auto r = classify_point(*bilinear, {0, 0});
        remember(bilinear, r);
        if (r.verdict != Verdict::StrictSaddle) {
            c.require(false, "bilinear " + text.str() + " strict saddle");
            break;
        }
    }
}

void criterion_2_monkey_saddle(Check& c)
{
    auto field = field_of("x^3 - 3*x*y^2");
    DiscriminantResult dt = discriminant_test(*field, {0, 0});
    c.require(std::abs(dt.discriminant) <= 1e-12, "discriminant reported 0");
    c.require(dt.kind == DiscriminantResult::Kind::Inconclusive,
              "discriminant test inconclusive");

    auto result = classify_point(*field, {0, 0});
    remember(field, result);
    c.require(result.verdict == Verdict::StrictSaddle,
              "path search certifies the monkey saddle");
    if (!result.certificate)
        return;
    const auto& cert = *result.certificate;
    c.require(transversal(cert.path_max, cert.path_min), "paths transversal");

    // phi behaves like -24 t^4 along the max path and +24 t^4 along the min
    // path: negative/positive on both sides, and the engine's evaluation
    // along the path matches an independent hand-coded evaluation.
    auto direct = [](Vec2 p) { return p.x * p.x * p.x - 3 * p.x * p.y * p.y; };
    for (double t : {0.05, -0.05}) {
        Vec2 pmax = cert.path_max.point_at(t);
        Vec2 pmin = cert.path_min.point_at(t);
        double vmax = field->value(pmax);
        double vmin = field->value(pmin);
        c.require(vmax < 0, "max path dips below the center value");
        c.require(vmin > 0, "min path rises above the center value");
        c.require(std::abs(vmax - direct(pmax))
                      <= 1e-6 * std::max(1e-30, std::abs(direct(pmax))),
                  "engine evaluation matches direct evaluation (max path)");
        c.require(std::abs(vmin - direct(pmin))
                      <= 1e-6 * std::max(1e-30, std::abs(direct(pmin))),
                  "engine evaluation matches direct evaluation (min path)");
    }
}

void criterion_3_dog_saddle(Check& c)
{
    auto field = field_of("x^3*y - x*y^3");
    Jet2 j = eval_jet(parse("x^3*y - x*y^3"), {0, 0});
    c.require(std::abs(j.fxx) <= 1e-12 && std::abs(j.fxy) <= 1e-12
                  && std::abs(j.fyy) <= 1e-12,
              "Hessian identically zero at the origin");
    auto result = classify_point(*field, {0, 0});
    remember(field, result);
    c.require(result.verdict == Verdict::StrictSaddle, "strict saddle");
    if (result.certificate) {
        c.require(result.certificate->path_max.kind() == PathKind::Line
                      && result.certificate->path_min.kind() == PathKind::Line,
                  "certificate uses line paths only");
    }
}

void criterion_4_fake_saddle(Check& c)
{
    auto field = field_of("x^3");
    auto result = classify_point(*field, {0, 0});
    remember(field, result);
    c.require(result.verdict == Verdict::ClassicalSaddleOnly,
              "verdict is classical-saddle-only");
    ClassicalEvidence ev =
        classical_saddle_check(*field, {0, 0}, {1e-1, 1e-2, 1e-3});
    c.require(ev.outcome == ClassicalOutcome::ClassicalSaddle,
              "classical evidence fires at radii 1e-1, 1e-2, 1e-3");
    SearchConfig cfg; // K = 64, full parabola set
    c.require(!search_saddle_paths(*field, {0, 0}, cfg).has_value(),
              "no certificate from the full search");
}

void criterion_5_two_parabola(Check& c)
{
    auto field = field_of("(y - x^2)*(y - 2*x^2)");
    SearchConfig lines_only;
    lines_only.parabola_coeffs.clear();
    SearchSummary summary;
    auto none = search_saddle_paths(*field, {0, 0}, lines_only, &summary);
    c.require(!none.has_value(), "line-only search finds nothing");
    c.require(summary.strict_min_found == summary.lines_tried
                  && summary.lines_tried > 0,
              "every sampled line direction is a strict minimum");
    c.require(summary.strict_max_found == 0, "no line is a strict maximum");

    auto result = classify_point(*field, {0, 0});
    remember(field, result);
    c.require(result.verdict == Verdict::StrictSaddle,
              "full search certifies the saddle");
    if (result.certificate)
        c.require(result.certificate->path_max.kind() == PathKind::Parabola,
                  "strict-max path is a parabola");
}

void criterion_6_parity_tables(Check& c)
{
    int disagreements = 0;
    for (const CatalogEntry& entry : catalog()) {
        bool monomial_family = entry.name.rfind("product-", 0) == 0
                               || entry.name.rfind("difference-", 0) == 0
                               || entry.name.rfind("sum-", 0) == 0;
        if (!monomial_family)
            continue;
        Classification result = classify_point(*entry.field, entry.point);
        remember(entry.field, result);
        const bool has_certificate = result.verdict == Verdict::StrictSaddle;
        const bool should = entry.expected == ExpectedOutcome::StrictSaddle;
        if (has_certificate != should) {
            ++disagreements;
            c.detail << "    certificate mismatch on " << entry.name << "\n";
        }
        if (match_verdict(entry, result) == MatchResult::Fail) {
            ++disagreements;
            c.detail << "    verdict mismatch on " << entry.name << " (got "
                     << to_string(result.verdict) << ")\n";
        }
    }
    c.require(disagreements == 0, "0 disagreements with the parity oracle");
}

void criterion_7_complex_powers(Check& c)
{
    for (int n = 1; n <= 6; ++n) {
        for (ComplexPart part : {ComplexPart::Re, ComplexPart::Im}) {
            Expr f = detail::complex_power_expr(n, part);
            auto field = std::make_shared<ExprField>(f);
            auto result = classify_point(*field, {0, 0});
            remember(field, result);
            std::string name = std::string(part == ComplexPart::Re ? "Re"
                                                                   : "Im")
                               + "(x+iy)^" + std::to_string(n);
            if (n == 1)
                c.require(result.verdict == Verdict::NotCritical,
                          name + " not critical");
            else
                c.require(result.verdict == Verdict::StrictSaddle,
                          name + " certified strict saddle");
        }
    }
}

void criterion_8_nondifferentiable(Check& c)
{
    auto field = min_abs_piecewise_field();
    auto result = classify_point(*field, {0, 0});
    remember(field, result);
    c.require(result.verdict == Verdict::StrictSaddle, "strict saddle");
    if (result.certificate) {
        c.require(result.certificate->grade == EvidenceGrade::Sampled,
                  "certificate grade is sampled");
        c.require(result.certificate->strict, "certificate is strict");
    } else {
        c.require(false, "certificate emitted");
    }
}

void criterion_9_gradient_property(Check& c)
{
    c.require(!g_certificates.empty(), "certificates were collected");
    for (const auto& [field, cert] : g_certificates) {
        auto jet = field->jet(cert.point);
        if (!jet)
            continue; // nondifferentiable example
        if (jet->gradient_norm() >= 1e-8) {
            c.require(false, "gradient norm below 1e-8 at a certified point");
            break;
        }
    }
}

void criterion_10_witness_suite(Check& c)
{
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    int tested = 0, failures = 0;
    while (tested < 1000) {
        QuadForm q{d(rng), d(rng), d(rng)};
        if (q.det() >= -1e-9)
            continue;
        ++tested;
        IndefiniteWitness w = indefinite_witness(q);
        if (!(q(w.u_pos) > 0) || !(q(w.u_neg) < 0)
            || !(std::abs(cross(w.u_pos, w.u_neg)) > 0))
            ++failures;
    }
    c.require(failures == 0, "0 witness failures over 1000 indefinite forms");
}

void criterion_11_equivalence_suite(Check& c)
{
    std::mt19937 rng(4096);
    std::uniform_int_distribution<int> coeff(-6, 6);
    int tested = 0, failures = 0;
    while (tested < 500) {
        int a = coeff(rng), b = coeff(rng), g = coeff(rng);
        long delta = 4L * a * g - 1L * b * b; // exact integer discriminant
        if (delta == 0)
            continue;
        ++tested;
        std::ostringstream text;
        text << a << "*x^2 + " << b << "*x*y + " << g << "*y^2";
        auto field = field_of(text.str());
        auto r = classify_point(*field, {0, 0});
        if (delta < 0) {
            if (r.verdict != Verdict::StrictSaddle)
                ++failures;
        } else {
            if (!(r.verdict == Verdict::LocalMin
                  || r.verdict == Verdict::LocalMax))
                ++failures;
        }
    }
    c.require(failures == 0,
              "saddle iff discriminant < 0 over 500 random quadratics");
}

void criterion_12_differentiation_crosscheck(Check& c)
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> pt(-1.0, 1.0);
    const double h = 1e-4;
    int grad_failures = 0, hess_failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Expr f = Expr::constant(0L);
        for (int dx = 0; dx <= 5; ++dx)
            for (int dy = 0; dy + dx <= 5; ++dy) {
                Expr term =
                    Expr::constant(rational_from_double(coeff(rng)));
                if (dx)
                    term = term * pow(Expr::x(), dx);
                if (dy)
                    term = term * pow(Expr::y(), dy);
                f = f + term;
            }
        Vec2 p{pt(rng), pt(rng)};
        Jet2 j = eval_jet(f, p);
        auto fv = [&](double dx, double dy) {
            return eval_value(f, {p.x + dx, p.y + dy});
        };
        double fx = (fv(h, 0) - fv(-h, 0)) / (2 * h);
        double fy = (fv(0, h) - fv(0, -h)) / (2 * h);
        double fxx = (fv(h, 0) - 2 * fv(0, 0) + fv(-h, 0)) / (h * h);
        double fyy = (fv(0, h) - 2 * fv(0, 0) + fv(0, -h)) / (h * h);
        double fxy = (fv(h, h) - fv(h, -h) - fv(-h, h) + fv(-h, -h))
                     / (4 * h * h);
        auto rel = [](double got, double want) {
            return std::abs(got - want) / std::max(1.0, std::abs(got));
        };
        if (rel(j.fx, fx) >= 1e-5 || rel(j.fy, fy) >= 1e-5)
            ++grad_failures;
        if (rel(j.fxx, fxx) >= 1e-3 || rel(j.fyy, fyy) >= 1e-3
            || rel(j.fxy, fxy) >= 1e-3)
            ++hess_failures;
    }
    c.require(grad_failures == 0, "gradient rel error < 1e-5 on 200 trials");
    c.require(hess_failures == 0, "Hessian rel error < 1e-3 on 200 trials");
}

void criterion_13_figures(Check& c)
{
    for (const char* text :
         {"x^3", "x^2 + y^3", "x^3 - 3*x*y^2", "x^3*y - x*y^3"}) {
        Grid g = sample_grid(parse(text), {-1, 1, -1, 1}, 65, 65);
        std::string mesh = surface_mesh(g);
        int v = 0, f = 0;
        std::istringstream in(mesh);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("v ", 0) == 0)
                ++v;
            if (line.rfind("f ", 0) == 0)
                ++f;
        }
        c.require(v == 65 * 65,
                  std::string(text) + " mesh has 4225 vertices");
        c.require(f == 2 * 64 * 64,
                  std::string(text) + " mesh has 8192 triangles");
    }

    Grid g = sample_grid(parse("x*y"), {-1, 1, -1, 1}, 65, 65);
    auto lines = level_curves(g, {0.0});
    const double cell = 2.0 / 64.0;
    bool on_axes = !lines.empty();
    for (const Polyline& line : lines)
        for (Vec2 p : line.points)
            on_axes = on_axes
                      && std::min(std::abs(p.x), std::abs(p.y)) <= cell;
    c.require(on_axes, "level 0 of x*y traces the axes within one cell");
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "discriminant-test fast path (xy and random bilinear forms)",
         criterion_1_discriminant_fast_path},
        {2, "monkey saddle certified through the degenerate path search",
         criterion_2_monkey_saddle},
        {3, "dog saddle certified with line paths despite zero Hessian",
         criterion_3_dog_saddle},
        {4, "fake saddle: classical evidence only, no certificate",
         criterion_4_fake_saddle},
        {5, "two-parabola function separates line and parabola families",
         criterion_5_two_parabola},
        {6, "parity tables for x^m y^n, x^m - y^n, x^m + y^n (m,n <= 5)",
         criterion_6_parity_tables},
        {7, "generalized monkey/dog family Re/Im (x+iy)^n, n <= 6",
         criterion_7_complex_powers},
        {8, "nondifferentiable piecewise example certified (sampled)",
         criterion_8_nondifferentiable},
        {9, "all certificates sit at critical points (|grad| < 1e-8)",
         criterion_9_gradient_property},
        {10, "constructive indefiniteness witnesses (1000 random forms)",
         criterion_10_witness_suite},
        {11, "saddle <=> negative discriminant (500 random quadratics)",
         criterion_11_equivalence_suite},
        {12, "jet derivatives vs central finite differences (200 trials)",
         criterion_12_differentiation_crosscheck},
        {13, "figure reproduction: mesh counts and axis-tracing contours",
         criterion_13_figures},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        criterion.run(check);
        std::cout << "CRITERION " << std::setw(2) << std::setfill('0')
                  << criterion.number << " "
                  << (check.ok ? "PASS" : "FAIL") << " - " << criterion.name
                  << "\n"
                  << std::setfill(' ');
        if (!check.ok) {
            std::cout << check.detail.str();
            ++failures;
        }
    }
    if (failures == 0)
        std::cout << "all 13 acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures;
}
