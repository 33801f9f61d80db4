#include <catch2/catch_amalgamated.hpp>

#include <geosaddle/quadform.hpp>

#include <random>

using namespace geosaddle;

TEST_CASE("evaluation")
{
    CHECK(QuadForm{0, 1, 0}({1, 1}) == 2);
    CHECK(QuadForm{1, 0, -1}({1, 0}) == 1);
    CHECK(QuadForm{1, 0, -1}({0, 1}) == -1);
}

TEST_CASE("quadratic scaling Q(t h) = t^2 Q(h)")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        QuadForm q{d(rng), d(rng), d(rng)};
        Vec2 h{d(rng), d(rng)};
        double t = d(rng);
        CHECK(q(t * h)
              == Catch::Approx(t * t * q(h)).margin(1e-12));
    }
}

TEST_CASE("classification")
{
    CHECK(classify({0, 1, 0}) == Definiteness::Indefinite);
    CHECK(classify({1, 0, 1}) == Definiteness::PositiveDefinite);
    CHECK(classify({-1, 0, -2}) == Definiteness::NegativeDefinite);
    CHECK(classify({1, 1, 1}) == Definiteness::PositiveSemidefinite);
    CHECK(classify({-1, 1, -1}) == Definiteness::NegativeSemidefinite);
    CHECK(classify({0, 0, 0}) == Definiteness::Zero);
    CHECK(classify({1, 0, 0}) == Definiteness::PositiveSemidefinite);
    CHECK(classify({1, 0, -1}) == Definiteness::Indefinite);
}

TEST_CASE("classification agrees with the eigenvalue signs")
{
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        QuadForm q{d(rng), d(rng), d(rng)};
        // Closed-form eigenvalues of [[a, b], [b, c]].
        double mean = (q.a + q.c) / 2;
        double rad = std::hypot((q.a - q.c) / 2, q.b);
        double lo = mean - rad, hi = mean + rad;
        // Stay away from the tolerance band where classification saturates.
        if (std::abs(lo) < 1e-6 || std::abs(hi) < 1e-6)
            continue;
        Definiteness got = classify(q);
        if (lo > 0)
            CHECK(got == Definiteness::PositiveDefinite);
        else if (hi < 0)
            CHECK(got == Definiteness::NegativeDefinite);
        else if (lo < 0 && hi > 0)
            CHECK(got == Definiteness::Indefinite);
    }
}

TEST_CASE("classification is scale invariant")
{
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(0.1, 4.0);
    for (int i = 0; i < 200; ++i) {
        QuadForm q{d(rng), d(rng), d(rng)};
        if (std::abs(q.det()) < 1e-6)
            continue;
        double t = scale(rng);
        QuadForm s{t * t * q.a, t * t * q.b, t * t * q.c};
        CHECK(classify(s) == classify(q));
    }
}

TEST_CASE("indefiniteness witnesses follow the constructive case split")
{
    // a != 0: vectors (1,0) and (b,-a), ordered by sign.
    auto w = indefinite_witness({1, 0, -1});
    CHECK(w.u_pos == Vec2{1, 0});
    CHECK(w.u_neg == Vec2{0, -1});
    CHECK(QuadForm{1, 0, -1}(w.u_pos) == 1);
    CHECK(QuadForm{1, 0, -1}(w.u_neg) == -1);

    // a = c = 0: vectors (1,1) and (1,-1).
    auto w2 = indefinite_witness({0, 1, 0});
    CHECK(w2.u_pos == Vec2{1, 1});
    CHECK(w2.u_neg == Vec2{1, -1});
    CHECK(QuadForm{0, 1, 0}(w2.u_pos) == 2);
    CHECK(QuadForm{0, 1, 0}(w2.u_neg) == -2);

    // a = 0, c != 0: vectors (0,1) and (c,-b).
    auto w3 = indefinite_witness({0, 1, 2});
    CHECK(w3.u_pos == Vec2{0, 1});
    CHECK(w3.u_neg == Vec2{2, -1});
    CHECK(QuadForm{0, 1, 2}(w3.u_pos) == 2);
    CHECK(QuadForm{0, 1, 2}(w3.u_neg) == -2);

    CHECK_THROWS_AS(indefinite_witness({1, 0, 1}), NotIndefinite);
    CHECK_THROWS_AS(indefinite_witness({0, 0, 0}), NotIndefinite);
}

TEST_CASE("witnesses are valid for 1000 random indefinite forms")
{
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    int tested = 0;
    while (tested < 1000) {
        QuadForm q{d(rng), d(rng), d(rng)};
        if (q.det() >= -1e-9)
            continue;
        ++tested;
        IndefiniteWitness w = indefinite_witness(q);
        CHECK(q(w.u_pos) > 0);
        CHECK(q(w.u_neg) < 0);
        CHECK(std::abs(cross(w.u_pos, w.u_neg)) > 0);
    }
}
