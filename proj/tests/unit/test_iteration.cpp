#include <cmath>

#include "doctest.h"
#include "growth.hpp"
#include "iteration.hpp"
#include "numerics.hpp"

using namespace orlicz;
using namespace orlicz::iteration;

namespace {

GrowthSpec pure_power(double p, double q) {
    GrowthSpec s;
    s.family = GrowthFamily::G1;
    s.p = p;
    s.q = q;
    s.validate();
    return s;
}

}  // namespace

TEST_CASE("fast-geometric lemma: hand-iterated case") {
    // y_{j+1} = 2 * 2^j * y_j^2, y0 = nu = 1/4: y_j = 2^{-j}/4 exactly.
    auto res = degiorgi_lemma(2.0, 2.0, 1.0, 0.25, 10);
    CHECK(res.nu == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(res.trace.rows[1].value.value() == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(res.trace.rows[2].value.value() == doctest::Approx(0.0625).epsilon(1e-13));
    for (std::size_t j = 0; j < res.trace.rows.size(); ++j) {
        CHECK(res.trace.rows[j].value.value() ==
              doctest::Approx(0.25 * std::pow(2.0, -(double)j)).epsilon(1e-12));
    }
    CHECK(res.converged);
    CHECK(res.trace.termination == Termination::Converged);
}

TEST_CASE("fast-geometric lemma: zero start and explosion") {
    auto zero = degiorgi_lemma(2.0, 2.0, 1.0, 0.0, 5);
    for (const auto& row : zero.trace.rows) CHECK(row.value.value() == 0.0);
    CHECK(zero.converged);

    // Slightly above the threshold the closed-form bound grows without bound.
    auto up = degiorgi_lemma_scaled(2.0, 2.0, 1.0, 1.01, 60);
    CHECK_FALSE(up.converged);
    const auto& rows = up.trace.rows;
    CHECK(rows.back().extra.log > rows.front().extra.log + 100.0);
}

TEST_CASE("fast-geometric lemma: sharpness over random parameters") {
    Rng rng(20240811);
    for (int trial = 0; trial < 100; ++trial) {
        const double c = rng.uniform(1.1, 10.0);
        const double b = rng.uniform(1.1, 10.0);
        const double delta = rng.uniform(0.1, 2.0);
        auto res = degiorgi_lemma_scaled(c, b, delta, 1.0, 40);
        const double log_nu = -std::log(c) / delta - std::log(b) / (delta * delta);
        for (const auto& row : res.trace.rows) {
            const double expected_log = log_nu - (double(row.j) / delta) * std::log(b);
            CHECK(std::abs(row.value.log - expected_log) < 1e-10);
            // closed-form bound coincides with the equality recursion
            CHECK(std::abs(row.extra.log - row.value.log) < 1e-10);
        }
        CHECK(res.converged);

        auto low = degiorgi_lemma_scaled(c, b, delta, 0.99, 2000);
        CHECK(low.converged);
    }
}

TEST_CASE("elliptic thresholds") {
    IterationParams p;
    p.a = 0.5;
    p.n = 2;
    p.gamma = 1.0;
    auto zero = LambdaSpec::constant(0.0);
    CHECK(elliptic_thresholds(p, zero, 0.1).nu1 == doctest::Approx(0.25).epsilon(1e-15));

    // gamma chosen so gamma/nu1 = 1: gamma = (1-a)^{n/2}
    IterationParams p2 = p;
    p2.gamma = 0.5;
    p2.xi = 0.5;
    auto th = elliptic_thresholds(p2, zero, 0.1);
    CHECK(th.jstar == doctest::Approx(4.0).epsilon(1e-14));

    IterationParams p3;
    p3.n = 2;
    p3.c4 = 1;
    p3.c5 = 1;
    CHECK(elliptic_thresholds(p3, zero, 0.1).beta == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("elliptic modulus bound") {
    IterationParams p;
    p.gamma = 1;
    p.c = 1;
    p.beta = 1;
    p.M = 1;
    p.s0 = 0;
    auto zero = LambdaSpec::constant(0.0);
    CHECK(elliptic_modulus(1.0, 0.5, p, zero) ==
          doctest::Approx(2.0 + std::exp(1.0)).epsilon(1e-12));
    const double r2 = 0.5 * std::exp(-std::exp(1.0));
    CHECK(elliptic_modulus(1.0, r2, p, zero) ==
          doctest::Approx(2.0 * std::exp(-1.0) + std::exp(1.0)).epsilon(1e-8));

    // non-decreasing in r with the other arguments fixed
    double prev = 0.0;
    for (int i = 0; i <= 30; ++i) {
        const double r = 1e-3 + (0.5 - 1e-3) * i / 30.0;
        const double bnd = elliptic_modulus(1.0, r, p, zero);
        CHECK(bnd >= prev - 1e-12);
        prev = bnd;
    }
}

TEST_CASE("elliptic oscillation trace") {
    IterationParams p;
    p.gamma = 1;
    p.beta = 1;
    p.s0 = 0;
    p.M = 1;
    auto zero = LambdaSpec::constant(0.0);

    SUBCASE("pure contraction with the additive term dropped") {
        IterationParams q = p;
        q.elliptic_additive_floor = false;
        auto tr = elliptic_oscillation_trace(1.0, 1.0, q, zero, 50);
        const double ratio = 1.0 - std::exp(-1.0);
        for (std::size_t j = 1; j < tr.rows.size(); ++j) {
            CHECK(tr.rows[j].value.value() ==
                  doctest::Approx(tr.rows[j - 1].value.value() * ratio).epsilon(1e-13));
        }
        CHECK(tr.rows[1].value.value() == doctest::Approx(ratio).epsilon(1e-13));
    }

    SUBCASE("zero start accumulates the additive floor") {
        auto tr = elliptic_oscillation_trace(0.0, 1.0, p, zero, 30);
        CHECK(tr.rows[0].value.value() == 0.0);
        CHECK(tr.rows.size() > 3);
        for (std::size_t j = 1; j < tr.rows.size(); ++j)
            CHECK(tr.rows[j].value.value() > 0.0);
    }

    SUBCASE("product bound along any trace") {
        auto tl = LambdaSpec::triple_log(0.5);
        auto tr = elliptic_oscillation_trace(1.0, 0.01, p, tl, 40);
        double prod = 1.0, sum = 0.0;
        for (const auto& row : tr.rows) {
            const double lam = eval_lambda_logr(tl, -row.radius.log);
            const double x = std::exp(-p.gamma * std::exp(p.beta * lam));
            prod *= (1.0 - x);
            sum += x;
            CHECK(prod <= std::exp(-sum) * (1.0 + 1e-12));
        }
    }

    SUBCASE("traces are byte-reproducible") {
        auto t1 = elliptic_oscillation_trace(1.0, 0.5, p, zero, 25);
        auto t2 = elliptic_oscillation_trace(1.0, 0.5, p, zero, 25);
        CHECK(trace_to_csv(t1) == trace_to_csv(t2));
    }
}

TEST_CASE("degenerate thresholds chain") {
    IterationParams p;
    p.nubar = 1;
    p.gamma = 1;
    p.n = 2;
    p.mu1 = 2;
    p.mu2 = 3;
    p.c0 = 1;
    p.c4 = 1;
    auto zero = LambdaSpec::constant(0.0);
    auto th = parabolic_degenerate_thresholds(p, zero, 0.1);
    CHECK(th.beta0 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(th.beta1 == doctest::Approx(50.0).epsilon(1e-15));
    CHECK(th.beta2 == doctest::Approx(36.0).epsilon(1e-15));
    CHECK(th.sigma == doctest::Approx(1.0 / 32.0).epsilon(1e-15));
    // 2^{s(mu1-1)} = gamma sigma^{-(1+mu2)} e^{c0 lambda} 16/nubar^2 = 32^4 * 16 = 2^24
    CHECK(th.s == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(th.s1 == doctest::Approx(24.0 - std::log2(1.0 - 1.0 / std::sqrt(1.5))).epsilon(1e-13));
    CHECK(th.s_star_lower == doctest::Approx(th.s1 + 1.0).epsilon(1e-13));
    CHECK(th.s_star_upper == doctest::Approx(th.s_star_lower).epsilon(1e-13));

    IterationParams bad = p;
    bad.mu1 = 0.9;
    CHECK_THROWS_AS(parabolic_degenerate_thresholds(bad, zero, 0.1), std::domain_error);
}

TEST_CASE("degenerate trace") {
    IterationParams p;
    p.gamma = 1;
    p.beta = 1;
    p.b0 = 0;
    p.delta0 = 0.5;
    p.mu1 = 2;
    p.mu2 = 3;
    auto zero = LambdaSpec::constant(0.0);
    auto spec = pure_power(3.0, 3.0);

    auto tr = parabolic_degenerate_trace(1.0, 1e-4, p, spec, zero, 40);
    const double contraction = 1.0 - 0.5 * std::exp(-1.0);
    CHECK(contraction == doctest::Approx(0.81606027941427883).epsilon(1e-15));
    REQUIRE(tr.rows.size() >= 3);
    for (std::size_t j = 1; j < tr.rows.size(); ++j) {
        CHECK(tr.rows[j].value.log ==
              doctest::Approx(tr.rows[j - 1].value.log + std::log(contraction)).epsilon(1e-12));
        // radii decrease by 8 each step; omega_j / r_j non-decreasing
        CHECK(tr.rows[j].radius.log ==
              doctest::Approx(tr.rows[j - 1].radius.log - std::log(8.0)).epsilon(1e-12));
        CHECK(tr.rows[j].value.log - tr.rows[j].radius.log >=
              tr.rows[j - 1].value.log - tr.rows[j - 1].radius.log - 1e-12);
    }
    CHECK(tr.has_final_bound);

    // omega0 = 0 floors immediately
    auto floored = parabolic_degenerate_trace(0.0, 0.5, p, spec, zero, 40);
    CHECK(floored.termination == Termination::FloorReached);
    CHECK(floored.rows.size() == 1);
}

TEST_CASE("singular thresholds") {
    IterationParams p;
    p.gamma = 1;
    p.nu = 1.0;
    p.n = 2;
    p.c0 = 1;
    p.mu3 = 0.5;
    p.mu4 = 0.6;
    p.c10 = 1;
    p.delta0 = 0.5;
    auto zero = LambdaSpec::constant(0.0);
    auto th = parabolic_singular_thresholds(p, zero, std::log(1.0 / 0.01));
    CHECK(th.C == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(th.beta == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(th.sigma0.value() == doctest::Approx(0.25 * std::exp(-4.0)).epsilon(1e-13));
    // tau1 = gamma0^{-1} exp(-8 e^4)
    CHECK(th.tau1.log == doctest::Approx(-std::log(1.5) - 8.0 * std::exp(4.0)).epsilon(1e-12));
    // eta from gamma sigma^{-gamma} eta^{mu3} = 1/16 with sigma = 1/(16 n)
    const double sigma = 1.0 / 32.0;
    CHECK(std::pow(th.eta, p.mu3) * p.gamma / sigma == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    // epsilon from (1+4 c10^2) eps^{mu3} = 2 sigma0
    CHECK(5.0 * std::exp(th.epsilon.log * p.mu3) ==
          doctest::Approx(2.0 * th.sigma0.value()).epsilon(1e-12));
    // jstar is the least integer with (1-sigma0)^j <= nu e^{-c0(n+1)lambda}
    const double s0v = th.sigma0.value();
    const double target = std::log(p.nu);
    CHECK(th.jstar * std::log1p(-s0v) <= target + 1e-9);
    CHECK((th.jstar - 1.0) * std::log1p(-s0v) > target);
}

TEST_CASE("singular trace with constant lambda") {
    IterationParams p;
    p.gamma = 1;
    p.nu = 1.0;
    p.n = 2;
    p.c0 = 1;
    p.mu3 = 0.5;
    p.mu4 = 0.6;
    p.delta0 = 0.5;
    p.b0 = 0;
    auto zero = LambdaSpec::constant(0.0);
    auto spec = pure_power(1.5, 1.8);

    // Start deep enough that the floor branch stays inactive.
    const double log_inv_rho = 600.0;
    auto tr = parabolic_singular_trace(1.0, log_inv_rho, p, spec, zero, 12);
    REQUIRE(tr.rows.size() >= 10);
    const double step = tr.rows[1].radius.log - tr.rows[0].radius.log;
    for (std::size_t j = 1; j < tr.rows.size(); ++j) {
        CHECK(tr.rows[j].radius.log - tr.rows[j - 1].radius.log ==
              doctest::Approx(step).epsilon(1e-12));
        CHECK(tr.rows[j].value.log <= tr.rows[j - 1].value.log + 1e-15);
    }
    CHECK(tr.has_final_bound);

    // omega0 below the floor rides the floor branch
    auto low = parabolic_singular_trace(1e-280, 600.0, p, spec, zero, 3);
    CHECK(low.rows[1].value.log > low.rows[0].value.log);

    // byte reproducibility
    auto tr2 = parabolic_singular_trace(1.0, log_inv_rho, p, spec, zero, 12);
    CHECK(trace_to_csv(tr) == trace_to_csv(tr2));
}

TEST_CASE("interior cylinder thresholds") {
    IterationParams p;
    p.gamma = 1;
    p.n = 2;
    p.c0 = 1;
    CHECK(parabolic_nu2(p, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(parabolic_nu1(p, 0.0, 1.0) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(parabolic_nu2(p, std::log(2.0), 1.0) == doctest::Approx(std::pow(2.0, -3.0)).epsilon(1e-13));
}
