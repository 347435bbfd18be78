#include <cmath>

#include "doctest.h"
#include "growth.hpp"
#include "numerics.hpp"

using namespace orlicz;

namespace {

GrowthSpec base_spec(GrowthFamily fam, double p, double q) {
    GrowthSpec s;
    s.family = fam;
    s.p = p;
    s.q = q;
    s.validate();
    return s;
}

const double cx = 0.5, cy = 0.5;

}  // namespace

TEST_CASE("eval_g family formulas") {
    auto g1 = base_spec(GrowthFamily::G1, 2, 2);
    CHECK(eval_g(g1, cx, cy, 0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));

    auto g1b = base_spec(GrowthFamily::G1, 2, 3);
    CHECK(eval_g(g1b, cx, cy, 0, 2.0) == doctest::Approx(6.0).epsilon(1e-15));

    auto g3 = base_spec(GrowthFamily::G3, 2, 3);  // a defaults to 0
    CHECK(eval_g(g3, cx, cy, 0, 5.0) == doctest::Approx(5.0).epsilon(1e-15));

    auto g2 = base_spec(GrowthFamily::G2, 2, 2);
    CHECK(eval_g(g2, cx, cy, 0, 1.0) == doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-15));

    auto g4 = base_spec(GrowthFamily::G4, 3, 3);
    g4.b_field = [](double, double, double) { return 2.0; };
    CHECK(eval_g(g4, cx, cy, 0, 1.0) ==
          doctest::Approx(1.0 * (1.0 + 2.0 * std::log(2.0))).epsilon(1e-15));
}

TEST_CASE("eval_g error paths") {
    auto g1 = base_spec(GrowthFamily::G1, 2, 3);
    CHECK_THROWS_AS(eval_g(g1, cx, cy, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(eval_g(g1, cx, cy, 0, -1.0), std::domain_error);
    CHECK_THROWS_AS(eval_g(g1, 5.0, 5.0, 0, 1.0), std::domain_error);  // outside ball

    auto g3 = base_spec(GrowthFamily::G3, 2, 3);
    g3.a_field = [](double, double, double) { return -0.5; };
    CHECK_THROWS_AS(eval_g(g3, cx, cy, 0, 1.0), std::invalid_argument);
}

TEST_CASE("eval_G closed forms and limits") {
    auto g1 = base_spec(GrowthFamily::G1, 2, 2);
    CHECK(eval_G(g1, cx, cy, 0, 2.0) == doctest::Approx(4.0).epsilon(1e-14));

    auto g3 = base_spec(GrowthFamily::G3, 3, 3);
    CHECK(eval_G(g3, cx, cy, 0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // z -> 0+ gives a vanishing integral
    CHECK(eval_G(g1, cx, cy, 0, 1e-12) < 1e-20);
    CHECK_THROWS_AS(eval_G(g1, cx, cy, 0, 0.0), std::domain_error);
}

TEST_CASE("primitive consistency: dG/dz matches g") {
    std::vector<GrowthSpec> specs;
    specs.push_back(base_spec(GrowthFamily::G1, 1.7, 2.6));
    specs.push_back(base_spec(GrowthFamily::G2, 1.8, 1.8));
    {
        auto s = base_spec(GrowthFamily::G3, 1.9, 2.4);
        s.a_field = [](double x, double y, double) { return 0.5 + x + y; };
        specs.push_back(s);
    }
    {
        auto s = base_spec(GrowthFamily::G4, 2.2, 2.2);
        s.b_field = [](double x, double, double) { return 1.0 + x; };
        specs.push_back(s);
    }
    for (const auto& s : specs) {
        for (int i = 0; i < 100; ++i) {
            const double z = std::exp(std::log(1e-2) + (std::log(1e2) - std::log(1e-2)) * i / 99.0);
            const double h = z * 1e-6;
            const double fd =
                (eval_G(s, cx, cy, 0, z + h) - eval_G(s, cx, cy, 0, z - h)) / (2.0 * h);
            CHECK(fd == doctest::Approx(eval_g(s, cx, cy, 0, z)).epsilon(1e-6));
            // G(z) <= g(z) z since g is nondecreasing
            CHECK(eval_G(s, cx, cy, 0, z) <= eval_g(s, cx, cy, 0, z) * z * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("monotonicity in v and limit behavior") {
    std::vector<GrowthSpec> specs;
    specs.push_back(base_spec(GrowthFamily::G1, 1.5, 1.8));
    specs.push_back(base_spec(GrowthFamily::G2, 1.5, 1.5));
    {
        auto s = base_spec(GrowthFamily::G3, 1.8, 2.4);
        s.a_field = [](double x, double y, double) { return 0.25 * (x + y); };
        specs.push_back(s);
    }
    {
        auto s = base_spec(GrowthFamily::G4, 1.5, 1.5);
        s.b_field = [](double, double y, double) { return 1.0 + y; };
        specs.push_back(s);
    }
    Rng rng(42);
    for (const auto& s : specs) {
        for (int i = 0; i < 1000; ++i) {
            const double ang = rng.uniform(0, 6.28318), rad = 0.49 * rng.uniform01();
            const double x = cx + rad * std::cos(ang), y = cy + rad * std::sin(ang);
            const double v = rng.log_uniform(1e-6, 1e6);
            const double w = v * rng.log_uniform(1.0 + 1e-12, 1e3);
            CHECK(eval_g(s, x, y, 0, v) <= eval_g(s, x, y, 0, w) * (1.0 + 1e-12));
        }
        CHECK(eval_g(s, cx, cy, 0, 1e-8) < 1e-3);
        CHECK(eval_g(s, cx, cy, 0, 1e8) > 1e3);
    }
}

TEST_CASE("psi agrees with g/v and log_g with ln g") {
    auto g1 = base_spec(GrowthFamily::G1, 2, 2);
    CHECK(eval_psi(g1, cx, cy, 0, 7.0) == doctest::Approx(2.0).epsilon(1e-15));

    auto g1c = base_spec(GrowthFamily::G1, 3, 3);
    CHECK(eval_psi(g1c, cx, cy, 0, 2.0) == doctest::Approx(4.0).epsilon(1e-15));

    std::vector<GrowthSpec> specs{base_spec(GrowthFamily::G1, 1.6, 2.8),
                                  base_spec(GrowthFamily::G2, 2.1, 2.1)};
    {
        auto s = base_spec(GrowthFamily::G3, 1.7, 2.2);
        s.a_field = [](double, double, double) { return 0.3; };
        specs.push_back(s);
        s = base_spec(GrowthFamily::G4, 2.5, 2.5);
        s.b_field = [](double, double, double) { return 0.7; };
        specs.push_back(s);
    }
    Rng rng(7);
    for (const auto& s : specs) {
        for (int i = 0; i < 50; ++i) {
            const double v = rng.log_uniform(1e-5, 1e5);
            CHECK(eval_psi(s, cx, cy, 0, v) * v ==
                  doctest::Approx(eval_g(s, cx, cy, 0, v)).epsilon(1e-14));
            CHECK(log_g(s, cx, cy, 0, std::log(v)) ==
                  doctest::Approx(std::log(eval_g(s, cx, cy, 0, v))).epsilon(1e-12));
        }
        // log_g stays finite far outside double range of v
        CHECK(std::isfinite(log_g(s, cx, cy, 0, 5000.0)));
        CHECK(std::isfinite(log_g(s, cx, cy, 0, -5000.0)));
    }
}

TEST_CASE("lambda families and Lambda helpers") {
    auto zero = LambdaSpec::constant(0.0);
    CHECK(eval_Lambda(zero, 2.0, 0.01) == doctest::Approx(1.0));
    CHECK(eval_Lambda1(zero, 3.0, 2.0, 0.01) == doctest::Approx(std::exp(3.0)));
    CHECK(eval_Lambda1(zero, 1.0, 2.0, 0.01) == doctest::Approx(std::exp(1.0)));

    auto tl = LambdaSpec::triple_log(1.0);
    const double r = std::exp(-std::exp(std::exp(1.0)));
    CHECK(eval_lambda(tl, r) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eval_Lambda(tl, 2.0, r) == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(eval_lambda(tl, 0.99), std::domain_error);  // beyond r_max = e^{-e}

    // Non-increasing over a decreasing r grid
    double prev = -1;
    for (int k = 2; k <= 40; ++k) {
        const double rk = std::pow(10.0, -k);
        const double lam = eval_lambda(tl, rk);
        CHECK(lam >= prev - 1e-15);
        prev = lam;
    }

    // Quad-log variant floors at zero everywhere in double range
    auto ql = LambdaSpec::quad_log_variant(0.25);
    CHECK(eval_lambda(ql, 1e-8) == 0.0);
    CHECK(eval_lambda(ql, 1e-300) == 0.0);
    CHECK(eval_lambda_logr(ql, 1e300) == 0.0);

    // Custom family validation: increasing lambda is rejected
    CHECK_THROWS_AS(LambdaSpec::custom_fn([](double r) { return r; }, 0.5),
                    std::invalid_argument);
    auto lg = LambdaSpec::custom_fn([](double r) { return std::log(1.0 / r); }, 1.0);
    CHECK(eval_Lambda(lg, 2.0, 0.1) == doctest::Approx(std::pow(0.1, -2.0)).epsilon(1e-12));
}
