#include <cmath>

#include "conditions.hpp"
#include "doctest.h"
#include "growth.hpp"

using namespace orlicz;
using namespace orlicz::conditions;

namespace {

GrowthSpec family(GrowthFamily fam, double p, double q) {
    GrowthSpec s;
    s.family = fam;
    s.p = p;
    s.q = q;
    return s;
}

}  // namespace

TEST_CASE("upper growth condition") {
    SamplePlan plan;

    SUBCASE("pure power saturates at ratio one") {
        auto s = family(GrowthFamily::G1, 2, 2);
        auto rep = check_g1_elliptic(s, plan);
        CHECK(rep.verdict == Verdict::Holds);
        CHECK(rep.worst_ratio == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("under-declared exponent is caught with a witness") {
        auto s = family(GrowthFamily::G1, 2, 2);  // declares q = 2
        s.q_field = [](double, double, double) { return 3.0; };  // true growth is cubic
        auto rep = check_g1_elliptic(s, plan);
        CHECK(rep.verdict == Verdict::Violated);
        REQUIRE(rep.witness.has_value());
        CHECK(recheck_witness(rep, s, nullptr) == doctest::Approx(rep.worst_ratio));
        CHECK(recheck_witness(rep, s, nullptr) > 1.0);
    }

    SUBCASE("log factor absorbed by a safety constant") {
        auto s = family(GrowthFamily::G2, 2, 2.5);
        s.c1 = 2.0;
        s.s0 = 1.0;
        SamplePlan narrow = plan;
        narrow.v_cap = 100.0;
        auto rep = check_g1_elliptic(s, narrow);
        CHECK(rep.verdict == Verdict::Holds);
    }

    SUBCASE("empty plan is a usage error") {
        auto s = family(GrowthFamily::G1, 2, 2);
        SamplePlan empty = plan;
        empty.v_points = 0;
        CHECK_THROWS_AS(check_g1_elliptic(s, empty), std::invalid_argument);
    }
}

TEST_CASE("lower growth condition") {
    SamplePlan plan;

    SUBCASE("pure power saturates") {
        auto s = family(GrowthFamily::G1, 3, 3);
        auto rep = check_g3_lower(s, plan);
        CHECK(rep.verdict == Verdict::Holds);
        CHECK(rep.worst_ratio == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("two-term sum dominates its lower power") {
        auto s = family(GrowthFamily::G1, 2, 3);
        CHECK(check_g3_lower(s, plan).verdict == Verdict::Holds);
    }

    SUBCASE("over-declared lower exponent violated") {
        auto s = family(GrowthFamily::G1, 2.5, 2.5);  // declares growth >= (w/v)^{1.5}
        s.p_field = [](double, double, double) { return 2.0; };
        s.q_field = [](double, double, double) { return 2.0; };
        auto rep = check_g3_lower(s, plan);
        CHECK(rep.verdict == Verdict::Violated);
        REQUIRE(rep.witness.has_value());
        CHECK(recheck_witness(rep, s, nullptr) > 1.0);
    }
}

TEST_CASE("spatial continuity condition") {
    SamplePlan plan;
    auto zero = LambdaSpec::constant(0.0);

    SUBCASE("x-independent growth holds with c2 = 1") {
        auto s = family(GrowthFamily::G1, 1.8, 2.4);
        s.c2 = 1.0;
        auto rep = check_g2_continuity(s, zero, 2.0 * s.M, {0.01, 0.03}, plan);
        CHECK(rep.verdict == Verdict::Holds);
    }

    SUBCASE("log-modulated exponent within the predicted constant") {
        auto s = family(GrowthFamily::G1, 1.8, 2.4);
        const Point c = s.center;
        const double amp = 0.2;
        s.p_field = [c, amp](double x, double y, double) {
            const double d = std::max(std::hypot(x - c.x, y - c.y), 1e-12);
            return 1.8 + amp / std::log(1.0 / d);
        };
        auto lam = LambdaSpec::constant(amp);
        const double K = 2.0, r = 0.01;
        s.c2 = std::exp(amp * std::log(K) / std::log(1.0 / r)) * (1.0 + 1e-9);
        auto rep = check_g2_continuity(s, lam, K, {r}, plan);
        CHECK(rep.verdict == Verdict::Holds);
    }

    SUBCASE("coefficient jump beyond its modulus is violated") {
        auto s = family(GrowthFamily::G3, 1.8, 2.4);
        const Point c = s.center;
        s.a_field = [c](double x, double, double) { return x > c.x ? 5.0 : 0.0; };
        s.c2 = 1.1;
        auto rep = check_g2_continuity(s, zero, 2.0, {0.05}, plan);
        CHECK(rep.verdict == Verdict::Violated);
        REQUIRE(rep.witness.has_value());
        CHECK(recheck_witness(rep, s, &zero) > 1.0);
    }

    SUBCASE("ball too small is a usage error") {
        auto s = family(GrowthFamily::G1, 2, 2);
        CHECK_THROWS_AS(check_g2_continuity(s, zero, 2.0, {0.2}, plan), std::invalid_argument);
    }
}

TEST_CASE("psi regime condition") {
    SamplePlan plan;

    SUBCASE("cubic power saturates the degenerate bounds") {
        auto s = family(GrowthFamily::G1, 3, 3);
        s.mu1 = 1.0;
        s.mu2 = 1.0;
        s.c7 = 1.0;
        s.c8 = 1.0;
        auto rep = check_psi_regime(s, PsiRegime::Degenerate, 0.0, plan);
        CHECK(rep.verdict == Verdict::Holds);
        CHECK(rep.worst_ratio == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("sub-quadratic family fits the singular regime") {
        auto s = family(GrowthFamily::G1, 1.5, 1.8);
        s.mu3 = 2.0 - s.q;
        s.mu4 = 2.0 - s.p;
        auto rep = check_psi_regime(s, PsiRegime::Singular, 0.0, plan);
        CHECK(rep.verdict == Verdict::Holds);
    }

    SUBCASE("sub-quadratic family tested as degenerate is violated") {
        auto s = family(GrowthFamily::G1, 1.5, 1.8);
        s.mu1 = 0.3;
        s.mu2 = 0.4;
        auto rep = check_psi_regime(s, PsiRegime::Degenerate, 0.0, plan);
        CHECK(rep.verdict == Verdict::Violated);
        REQUIRE(rep.witness.has_value());
        CHECK(recheck_witness(rep, s, nullptr) > 1.0);
    }

    SUBCASE("missing constants are a usage error") {
        auto s = family(GrowthFamily::G1, 3, 3);
        CHECK_THROWS_AS(check_psi_regime(s, PsiRegime::Degenerate, 0.0, plan),
                        std::invalid_argument);
        s.delta = 0.5;
        s.mu1 = s.mu2 = 1.0;
        s.b0 = 1.0;
        CHECK_THROWS_AS(check_psi_regime(s, PsiRegime::Degenerate, 0.0, plan),
                        std::invalid_argument);  // R unset with delta > 0
    }
}

TEST_CASE("Young-type inequalities") {
    SamplePlan plan;

    SUBCASE("hand-substituted identity case") {
        GrowthSpec s;
        s.family = GrowthFamily::Custom;
        s.custom_g = [](double, double, double, double v) { return v; };
        s.p = 2.0;
        s.c7 = 1.0;
        // g(a) b <= eps g(a) a + g(b/eps) b at a=b=1, eps=1/2:  1 <= 0.5 + 2
        const double lhs = eval_g(s, 0.5, 0.5, 0, 1.0) * 1.0;
        const double rhs = 0.5 * eval_g(s, 0.5, 0.5, 0, 1.0) * 1.0 +
                           eval_g(s, 0.5, 0.5, 0, 2.0) * 1.0;
        CHECK(lhs == doctest::Approx(1.0));
        CHECK(rhs == doctest::Approx(2.5));
        CHECK(check_young(s, plan, 2000).verdict == Verdict::Holds);
    }

    SUBCASE("ten thousand samples per family, zero violations") {
        std::vector<GrowthSpec> specs;
        specs.push_back(family(GrowthFamily::G1, 1.5, 1.8));
        specs.push_back(family(GrowthFamily::G2, 1.5, 1.5));
        {
            auto s = family(GrowthFamily::G3, 1.8, 2.4);
            s.a_field = [](double x, double y, double) { return x + y; };
            specs.push_back(s);
            s = family(GrowthFamily::G4, 2.5, 2.5);
            s.b_field = [](double x, double, double) { return 2.0 * x; };
            specs.push_back(s);
        }
        for (const auto& s : specs) {
            auto rep = check_young(s, plan, 10000);
            CHECK(rep.verdict == Verdict::Holds);
            CHECK(rep.samples == 20000);
        }
    }
}

TEST_CASE("determinism of reports") {
    SamplePlan plan;
    auto s = family(GrowthFamily::G1, 2, 2);
    s.q_field = [](double, double, double) { return 3.0; };
    auto r1 = check_g1_elliptic(s, plan);
    auto r2 = check_g1_elliptic(s, plan);
    CHECK(r1.worst_ratio == r2.worst_ratio);  // bit-for-bit
    CHECK(r1.witness->v == r2.witness->v);
    CHECK(r1.witness->x1 == r2.witness->x1);
    plan.seed ^= 1;
    auto r3 = check_g1_elliptic(s, plan);
    CHECK(r3.verdict == Verdict::Violated);
}

TEST_CASE("regime classification of the shipped families") {
    auto zero = LambdaSpec::constant(0.0);

    SUBCASE("variable-exponent family") {
        auto deg = classify_example(family(GrowthFamily::G1, 2.5, 3.0), zero);
        CHECK(deg.regime == Regime::Degenerate);
        CHECK(deg.mu1 == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(deg.mu2 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(deg.delta == 0.0);
        CHECK(deg.b0 == 0.0);

        auto sng = classify_example(family(GrowthFamily::G1, 1.5, 1.8), zero);
        CHECK(sng.regime == Regime::Singular);
        CHECK(sng.mu3 == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(sng.mu4 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(sng.delta == 0.0);
        CHECK(sng.b0 == 0.0);

        auto mixed = family(GrowthFamily::G1, 1.5, 3.0);
        mixed.p1 = 1.8;
        mixed.q1 = 2.5;
        auto m = classify_example(mixed, zero);
        CHECK(m.regime == Regime::Degenerate);
        CHECK(m.mu1 == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(m.mu2 == doctest::Approx(1.0).epsilon(1e-15));
        // (2 - p + mu1)/(q1 - 2 + mu1) = 0.75/0.75 = 1, so the max picks 1
        CHECK(m.b0 == doctest::Approx(1.0).epsilon(1e-15));

        auto undec = classify_example(family(GrowthFamily::G1, 1.5, 3.0), zero);
        CHECK(undec.verdict == Verdict::Inconclusive);
    }

    SUBCASE("log-perturbed family") {
        auto deg = classify_example(family(GrowthFamily::G2, 2.5, 2.5), zero);
        CHECK(deg.regime == Regime::Degenerate);
        CHECK(deg.mu1 == doctest::Approx(0.5));
        CHECK(deg.mu2 == doctest::Approx(1.5));

        auto sng = classify_example(family(GrowthFamily::G2, 1.5, 1.5), zero);
        CHECK(sng.regime == Regime::Singular);
        CHECK(sng.mu3 == doctest::Approx(0.25));
        CHECK(sng.mu4 == doctest::Approx(0.5));
        CHECK(sng.b0 == doctest::Approx(std::exp(4.0) - 1.0).epsilon(1e-14));
    }

    SUBCASE("double-phase family with positive center coefficient") {
        auto s = family(GrowthFamily::G3, 2.5, 3.0);
        s.alpha = 0.75;
        s.a0 = 1.0;
        const Point c = s.center;
        s.a_field = [c](double x, double y, double) {
            return 1.0 + std::pow(std::hypot(x - c.x, y - c.y), 0.75);
        };
        auto r = classify_example(s, zero);
        CHECK(r.regime == Regime::Degenerate);
        CHECK(r.mu1 == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.mu2 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.delta == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(r.b0 == 0.0);  // q + 2 - 2p = 0
        REQUIRE(r.admissible_R.has_value());
        // R^0.75 = 1/2  => R = 2^{-4/3}
        CHECK(*r.admissible_R == doctest::Approx(std::pow(2.0, -4.0 / 3.0)).epsilon(1e-10));
        CHECK(r.r_residual <= 1e-10);

        auto s2 = family(GrowthFamily::G3, 2.2, 2.5);
        s2.alpha = 0.5;
        s2.a0 = 1.0;
        s2.a_field = s.a_field;
        auto r2 = classify_example(s2, zero);
        CHECK(r2.b0 ==
              doctest::Approx(std::pow(2.0 * 0.1 / 0.5, 1.0 / 0.3)).epsilon(1e-12));
    }

    SUBCASE("double-phase family, singular and mixed ranges") {
        auto s = family(GrowthFamily::G3, 1.5, 1.8);
        s.alpha = 0.5;
        s.a_field = [](double x, double, double) { return x; };
        auto r = classify_example(s, zero);
        CHECK(r.regime == Regime::Singular);
        CHECK(r.mu3 == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(r.mu4 == doctest::Approx(0.5).epsilon(1e-12));

        auto m = family(GrowthFamily::G3, 1.8, 2.4);
        m.alpha = 0.75;
        m.a0 = 1.0;
        m.M = 1.0;
        const Point c = m.center;
        m.a_field = [c](double x, double y, double) {
            return std::pow(std::hypot(x - c.x, y - c.y), 0.75);
        };
        auto rm = classify_example(m, zero);
        CHECK(rm.regime == Regime::Singular);
        CHECK(rm.mu3 == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(rm.mu4 == doctest::Approx(0.2).epsilon(1e-12));
        REQUIRE(rm.admissible_R.has_value());
        // (q - 1 - p/2) R^alpha = (2-p)/2: 0.5 R^{3/4} = 0.1
        CHECK(*rm.admissible_R == doctest::Approx(std::pow(0.2, 4.0 / 3.0)).epsilon(1e-10));
        CHECK(rm.r_residual <= 1e-10);
    }

    SUBCASE("log-coefficient family") {
        auto deg = classify_example(family(GrowthFamily::G4, 2.5, 2.5), zero);
        CHECK(deg.regime == Regime::Degenerate);
        auto sng = classify_example(family(GrowthFamily::G4, 1.5, 1.5), zero);
        CHECK(sng.regime == Regime::Singular);
        CHECK(sng.mu3 == doctest::Approx(0.25));
        CHECK(sng.mu4 == doctest::Approx(0.5));
        CHECK(sng.b0 == doctest::Approx(std::exp(4.0) - 1.0).epsilon(1e-14));
        auto half = classify_example(family(GrowthFamily::G4, 2.0, 2.0), zero);
        CHECK(half.regime == Regime::BothExcluded);
    }
}

TEST_CASE("lambda admissibility: elliptic and degenerate") {
    SUBCASE("constant lambda is admissible with a logarithmic partial integral") {
        auto zero = LambdaSpec::constant(0.0);
        auto rep = check_lambda_elliptic(zero, 1.0, 2.0, 0.01, 1e-12);
        CHECK(rep.overall == Verdict::Holds);
        CHECK(rep.partial_value ==
              doctest::Approx(std::exp(-1.0) * std::log(0.005 / rep.truncation_radius))
                  .epsilon(0.02));
    }

    SUBCASE("triple log below the critical amplitude passes both cases") {
        const double beta = 2.0;
        auto tl = LambdaSpec::triple_log(0.5 / beta);
        auto ell = check_lambda_elliptic(tl, 1.0, beta, 0.01, 1e-12);
        CHECK(ell.overall == Verdict::Holds);
        auto deg = check_lambda_parabolic_degenerate(tl, 1.0, beta, 0.5, 0.01, 1e-12);
        CHECK(deg.overall == Verdict::Holds);

        // monotone in L: a smaller amplitude stays admissible
        auto tl2 = LambdaSpec::triple_log(0.25 / beta);
        CHECK(check_lambda_elliptic(tl2, 1.0, beta, 0.01, 1e-12).overall == Verdict::Holds);
    }

    SUBCASE("too large an amplitude breaks the doubling bound") {
        const double beta = 2.0;
        auto tl = LambdaSpec::triple_log(10.0 / beta);
        auto rep = check_lambda_parabolic_degenerate(tl, 1.0, beta, 0.5, 0.01, 1e-12);
        CHECK(rep.doubling == Verdict::Violated);
        CHECK(rep.overall == Verdict::Violated);
    }

    SUBCASE("power-law Lambda fails the vanishing limit") {
        auto lg = LambdaSpec::custom_fn([](double r) { return std::log(1.0 / r); }, 1.0);
        auto rep = check_lambda_elliptic(lg, 1.0, 2.0, 0.01, 1e-12);
        CHECK(rep.vanishing == Verdict::Violated);
        CHECK(rep.overall == Verdict::Violated);
    }

    SUBCASE("usage errors") {
        auto zero = LambdaSpec::constant(0.0);
        CHECK_THROWS_AS(check_lambda_elliptic(zero, 1.0, 2.0, 0.01, 0.009),
                        std::invalid_argument);
        auto tl = LambdaSpec::triple_log(0.2);
        CHECK_THROWS_AS(check_lambda_elliptic(tl, 1.0, 2.0, 0.5, 1e-12),
                        std::invalid_argument);  // rho0 beyond the lambda domain
    }
}

TEST_CASE("lambda admissibility: singular sequence") {
    SUBCASE("constant lambda gives constant terms and a linear sum") {
        auto zero = LambdaSpec::constant(0.0);
        auto rep = check_lambda_parabolic_singular(zero, 1.0, 2.0, 1.0, 0.5, 0.01, 200);
        CHECK(rep.overall == Verdict::Holds);
        CHECK(rep.terms == 200);
        const double term = std::exp(-8.0 * std::exp(1.0));
        CHECK(rep.partial_value == doctest::Approx(200.0 * term).epsilon(1e-12));
        CHECK(rep.remark_bound == Verdict::Holds);
    }

    SUBCASE("quadruple-log variant is admissible") {
        const double beta = 2.0;
        auto ql = LambdaSpec::quad_log_variant(0.5 / beta);
        auto rep = check_lambda_parabolic_singular(ql, 1.0, beta, 1.0, 0.5, 1e-3, 300);
        CHECK(rep.overall == Verdict::Holds);
    }

    SUBCASE("triple log decays too fast for the series") {
        const double beta = 2.0;
        auto tl = LambdaSpec::triple_log(0.5 / beta);
        auto rep = check_lambda_parabolic_singular(tl, 1.0, beta, 1.0, 0.5, 0.01, 60);
        CHECK(rep.divergence == Verdict::Violated);
    }

    SUBCASE("scale bound at a deep starting radius") {
        auto zero = LambdaSpec::constant(0.0);
        // 8 Lambda1 = 8 e ~ 21.7; gamma0 = 1.5 => need ln(1/rho) >= 43.5
        auto rep = check_lambda_parabolic_singular(zero, 1.0, 2.0, 1.0, 0.5, 1e-20, 50);
        CHECK(rep.detail.find("holds") != std::string::npos);
        auto shallow = check_lambda_parabolic_singular(zero, 1.0, 2.0, 1.0, 0.5, 0.01, 50);
        CHECK(shallow.detail.find("fails") != std::string::npos);
    }
}
