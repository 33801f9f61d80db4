#include <catch2/catch_amalgamated.hpp>

#include <geosaddle/certify.hpp>
#include <geosaddle/json_io.hpp>
#include <geosaddle/oracle.hpp>

#include <cmath>
#include <random>

using namespace geosaddle;

namespace {
bool parallel_to(Vec2 a, Vec2 b)
{
    return std::abs(cross(a, b)) < 1e-9 * norm(a) * norm(b);
}
} // namespace

TEST_CASE("critical point location")
{
    auto only = find_critical_points(parse("x*y"), {-2, 2, -2, 2}, 9);
    REQUIRE(only.size() == 1);
    CHECK(norm(only[0].location) < 1e-7);
    CHECK(only[0].discriminant == Catch::Approx(-1.0).margin(1e-9));

    auto two = find_critical_points(parse("x^3 - 3*x + y^2"), {-2, 2, -2, 2});
    REQUIRE(two.size() == 2);
    CHECK(norm(two[0].location - Vec2{-1, 0}) < 1e-7);
    CHECK(norm(two[1].location - Vec2{1, 0}) < 1e-7);
    CHECK(two[0].discriminant == Catch::Approx(-12.0).margin(1e-6));
    CHECK(two[1].discriminant == Catch::Approx(12.0).margin(1e-6));

    // Singular Hessian along y = 0 exercises the damped fallback.
    auto cubic = find_critical_points(parse("x^2 + y^3"), {-2, 2, -2, 2});
    REQUIRE(cubic.size() == 1);
    CHECK(norm(cubic[0].location) < 1e-5);
}

TEST_CASE("discriminant test on the hyperbolic paraboloid")
{
    DiscriminantResult r = discriminant_test(parse("x*y"), {0, 0});
    CHECK(r.kind == DiscriminantResult::Kind::StrictSaddle);
    CHECK(r.discriminant == -1.0);
    REQUIRE(r.certificate.has_value());
    const SaddleCertificate& cert = *r.certificate;
    CHECK(cert.grade == EvidenceGrade::Exact);
    CHECK(cert.strict);
    // Unit-scaled witnesses along the diagonals, unit cross product.
    CHECK(parallel_to(cert.path_min.tangent(), {1, 1}));
    CHECK(parallel_to(cert.path_max.tangent(), {1, -1}));
    CHECK(norm(cert.path_min.tangent()) == Catch::Approx(1.0));
    CHECK(cert.cross == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("discriminant test outcomes")
{
    CHECK(discriminant_test(parse("x^3 - 3*x*y^2"), {0, 0}).kind
          == DiscriminantResult::Kind::Inconclusive);
    CHECK(discriminant_test(parse("x^2 + y^2"), {0, 0}).kind
          == DiscriminantResult::Kind::LocalMin);
    CHECK(discriminant_test(parse("-x^2 - y^2"), {0, 0}).kind
          == DiscriminantResult::Kind::LocalMax);
    CHECK(discriminant_test(parse("x*y"), {1, 1}).kind
          == DiscriminantResult::Kind::NotCritical);

    // (x+y)(2x+3y): Hessian (4, 5, 6), discriminant -1.
    DiscriminantResult bl =
        discriminant_test(parse("(x + y)*(2*x + 3*y)"), {0, 0});
    CHECK(bl.discriminant == Catch::Approx(-1.0).margin(1e-12));
    CHECK(bl.kind == DiscriminantResult::Kind::StrictSaddle);

    CHECK_THROWS_AS(discriminant_test(parse("min(abs(x),abs(y))"), {0, 0}),
                    NondifferentiablePoint);
}

TEST_CASE("search finds the diagonal pair for x*y")
{
    SearchConfig cfg;
    cfg.direction_count = 16;
    auto cert = search_saddle_paths(parse("x*y"), {0, 0}, cfg);
    REQUIRE(cert.has_value());
    CHECK(cert->strict);
    CHECK(cert->grade == EvidenceGrade::Exact);
    CHECK(cert->path_max.kind() == PathKind::Line);
    CHECK(parallel_to(cert->path_max.tangent(), {1, -1})); // theta = 3pi/4
    CHECK(parallel_to(cert->path_min.tangent(), {1, 1}));  // theta = pi/4
}

TEST_CASE("two-parabola function defeats lines but not parabolas")
{
    Expr f = parse("(y - x^2)*(y - 2*x^2)");
    SearchConfig lines_only;
    lines_only.parabola_coeffs.clear();
    SearchSummary summary;
    auto none = search_saddle_paths(f, {0, 0}, lines_only, &summary);
    CHECK_FALSE(none.has_value());
    CHECK(summary.strict_max_found == 0);
    // Every line direction is a strict minimum.
    CHECK(summary.strict_min_found == summary.lines_tried);

    auto cert = search_saddle_paths(f, {0, 0}, SearchConfig{});
    REQUIRE(cert.has_value());
    CHECK(cert->path_max.kind() == PathKind::Parabola);
    CHECK(cert->grade == EvidenceGrade::Exact);
    CHECK(verify_certificate(f, *cert));
}

TEST_CASE("no certificate exists for the fake saddle")
{
    auto cert = search_saddle_paths(parse("x^3"), {0, 0}, SearchConfig{});
    CHECK_FALSE(cert.has_value());
    SearchConfig big;
    big.direction_count = 96;
    big.parabola_coeffs = {0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
    CHECK_FALSE(search_saddle_paths(parse("x^3"), {0, 0}, big).has_value());
}

TEST_CASE("nondifferentiable example certifies at sampled grade")
{
    auto field = min_abs_piecewise_field();
    auto cert = search_saddle_paths(*field, {0, 0}, SearchConfig{});
    REQUIRE(cert.has_value());
    CHECK(cert->grade == EvidenceGrade::Sampled);
    CHECK(cert->strict);
    CHECK(parallel_to(cert->path_max.tangent(), {1, -1}));
    CHECK(parallel_to(cert->path_min.tangent(), {1, 1}));
    CHECK(verify_certificate(*field, *cert));
}

TEST_CASE("classical-definition check")
{
    CHECK(classical_saddle_check(parse("x^3"), {0, 0}).outcome
          == ClassicalOutcome::ClassicalSaddle);
    CHECK(classical_saddle_check(parse("x*y"), {0, 0}).outcome
          == ClassicalOutcome::ClassicalSaddle);
    CHECK(classical_saddle_check(parse("x^2 + y^2"), {0, 0}).outcome
          == ClassicalOutcome::LocalExtremum);
    CHECK(classical_saddle_check(parse("x^2 + y^2"), {1, 0}).outcome
          == ClassicalOutcome::NotCritical);
    CHECK(classical_saddle_check(*min_abs_piecewise_field(), {0, 0}).outcome
          == ClassicalOutcome::NotApplicable);
}

TEST_CASE("sign refutation")
{
    auto even = refute_strict_saddle_by_sign(ExprField(parse("x^2*y^2")),
                                             {0, 0});
    REQUIRE(even.has_value());
    CHECK(even->grade == EvidenceGrade::Exact);
    CHECK(even->nonnegative);

    auto sum = refute_strict_saddle_by_sign(ExprField(parse("x^2 + y^2")),
                                            {0, 0});
    REQUIRE(sum.has_value());
    CHECK(sum->grade == EvidenceGrade::Exact);

    auto neg = refute_strict_saddle_by_sign(ExprField(parse("-x^4 - y^2")),
                                            {0, 0});
    REQUIRE(neg.has_value());
    CHECK_FALSE(neg->nonnegative);

    CHECK_FALSE(
        refute_strict_saddle_by_sign(ExprField(parse("x*y")), {0, 0})
            .has_value());
    CHECK_FALSE(
        refute_strict_saddle_by_sign(ExprField(parse("x^2 - y^4")), {0, 0})
            .has_value());
}

TEST_CASE("classification pipeline on the worked examples")
{
    auto monkey = classify_point(parse("x^3 - 3*x*y^2"), {0, 0});
    CHECK(monkey.verdict == Verdict::StrictSaddle);
    REQUIRE(monkey.certificate.has_value());
    CHECK(*monkey.discriminant_value == 0.0);

    auto dog = classify_point(parse("x^3*y - x*y^3"), {0, 0});
    CHECK(dog.verdict == Verdict::StrictSaddle);
    REQUIRE(dog.certificate.has_value());
    CHECK(dog.certificate->path_max.kind() == PathKind::Line);
    CHECK(dog.certificate->path_min.kind() == PathKind::Line);
    CHECK(dog.certificate->grade == EvidenceGrade::Exact);

    CHECK(classify_point(parse("x^3"), {0, 0}).verdict
          == Verdict::ClassicalSaddleOnly);

    auto quartic = classify_point(parse("x^4 + y^4"), {0, 0});
    CHECK(quartic.verdict == Verdict::RefutedSaddle);
    CHECK(*quartic.refutation
          == RefutationReason::SignSemidefiniteNeighborhood);
    CHECK(*quartic.refutation_grade == EvidenceGrade::Exact);

    auto off = classify_point(parse("x*y"), {1, 1});
    CHECK(off.verdict == Verdict::NotCritical);
    REQUIRE(off.gradient.has_value());
    CHECK(off.gradient->x == 1.0);
    CHECK(off.gradient->y == 1.0);
}

TEST_CASE("non-dyadic critical points get an exact anchor")
{
    // Saddle of x^3 - x^2 - y^2 at (2/3, 0).
    Expr f = parse("x^3 - x^2 - y^2");
    Vec2 p{2.0 / 3.0, 0.0};
    auto r = classify_point(f, p);
    CHECK(r.verdict == Verdict::StrictSaddle);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->grade == EvidenceGrade::Exact);
    CHECK(verify_certificate(f, *r.certificate));
}

TEST_CASE("certificate verification rejects tampering")
{
    Expr f = parse("x*y");
    auto r = classify_point(f, {0, 0});
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(f, *r.certificate));

    SaddleCertificate tampered = *r.certificate;
    tampered.path_min = tampered.path_max; // parallel pair
    CHECK_FALSE(verify_certificate(f, tampered));
}

TEST_CASE("hand-built fake-saddle certificate fails verification")
{
    // Both paths are genuine strict extremum paths for x^3, but their
    // tangents at the origin coincide, so they certify nothing.
    Expr f = parse("x^3");
    auto g1 = make_parabola({0, 0}, {0, 1}, {-1, 0}, 1.0); // (-t^2, t)
    auto g2 = make_parabola({0, 0}, {0, 1}, {1, 0}, 1.0);  // (t^2, t)
    ExtremumReport r1 = classify_along(f, g1);
    ExtremumReport r2 = classify_along(f, g2);
    CHECK(r1.kind == ExtremumKind::StrictMax);
    CHECK(r2.kind == ExtremumKind::StrictMin);
    SaddleCertificate cert{{0, 0}, g1, g2, r1, r2,
                           std::abs(cross(g1.tangent(), g2.tangent())),
                           true, EvidenceGrade::Exact};
    CHECK_FALSE(verify_certificate(f, cert));
}

TEST_CASE("saddle equivalence for nondegenerate quadratics")
{
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    int tested = 0;
    while (tested < 100) {
        double a = d(rng), b = d(rng), c = d(rng);
        double delta = 4 * a * c - b * b;
        if (std::abs(delta) < 1e-2)
            continue;
        ++tested;
        Expr f = Expr::constant(rational_from_double(a)) * pow(Expr::x(), 2)
                 + Expr::constant(rational_from_double(b)) * Expr::x()
                       * Expr::y()
                 + Expr::constant(rational_from_double(c)) * pow(Expr::y(), 2);
        auto r = classify_point(f, {0, 0});
        if (delta < 0) {
            CHECK(r.verdict == Verdict::StrictSaddle);
            REQUIRE(r.certificate.has_value());
            CHECK(verify_certificate(f, *r.certificate));
            CHECK(r.certificate->grade == EvidenceGrade::Exact);
            CHECK(r.certificate->path_max.kind() == PathKind::Line);
        } else {
            CHECK((r.verdict == Verdict::LocalMin
                   || r.verdict == Verdict::LocalMax));
            CHECK((r.verdict == Verdict::LocalMin) == (a > 0));
        }
    }
}

TEST_CASE("certificates sit at critical points when f is differentiable")
{
    for (const char* text : {"x*y", "x^3 - 3*x*y^2", "x^3*y - x*y^3",
                             "(y - x^2)*(y - 2*x^2)", "x^3*y^3"}) {
        Expr f = parse(text);
        auto r = classify_point(f, {0, 0});
        REQUIRE(r.certificate.has_value());
        Jet2 j = eval_jet(f, r.certificate->point);
        INFO(text);
        CHECK(j.gradient_norm() < 1e-8);
    }
}

TEST_CASE("smooth non-polynomial fields certify at sampled grade")
{
    // Hessian of sin(x)*sin(y) at the origin is (0, 1, 0): the fast path
    // fires, and the line witnesses classify by sampling.
    Expr f = parse("sin(x)*sin(y)");
    auto r = classify_point(f, {0, 0});
    CHECK(r.verdict == Verdict::StrictSaddle);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->grade == EvidenceGrade::Sampled);
    CHECK(verify_certificate(f, *r.certificate));

    CHECK(classify_point(parse("exp(x^2 + y^2)"), {0, 0}).verdict
          == Verdict::LocalMin);
}

TEST_CASE("every certificate emitted over the catalog verifies")
{
    for (const CatalogEntry& entry : catalog()) {
        Classification r = classify_point(*entry.field, entry.point);
        if (r.certificate) {
            INFO(entry.name);
            CHECK(verify_certificate(*entry.field, *r.certificate));
        }
        if (entry.expected == ExpectedOutcome::StrictSaddle) {
            INFO(entry.name);
            CHECK(r.verdict == Verdict::StrictSaddle);
        }
    }
}

TEST_CASE("search results are deterministic")
{
    Expr f = parse("x^3 - 3*x*y^2");
    auto a = classify_point(f, {0, 0});
    auto b = classify_point(f, {0, 0});
    REQUIRE(a.certificate.has_value());
    REQUIRE(b.certificate.has_value());
    json ja = certificate_to_json(*a.certificate, std::nullopt);
    json jb = certificate_to_json(*b.certificate, std::nullopt);
    CHECK(ja == jb);
}

TEST_CASE("certificate JSON matches the stable schema")
{
    Expr f = parse("x*y");
    auto r = classify_point(f, {0, 0});
    REQUIRE(r.certificate.has_value());
    json j = certificate_to_json(*r.certificate,
                                 eval_jet(f, {0, 0}).gradient_norm());
    CHECK(certificate_json_valid(j));
    CHECK(j["grade"] == "exact");
    CHECK(j["strict"] == true);
    CHECK(j["path_max"]["kind"] == "line");
    CHECK(j["path_max"]["phi_lowest_term"]["degree"] == 2);
    CHECK(j["path_max"]["phi_lowest_term"]["coeff_sign"] == -1);

    json piecewise = certificate_to_json(
        *classify_point(*min_abs_piecewise_field(), {0, 0}).certificate,
        std::nullopt);
    CHECK(certificate_json_valid(piecewise));
    CHECK(piecewise["grade"] == "sampled");
    CHECK(piecewise["gradient_norm"].is_null());
}
