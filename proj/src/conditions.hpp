/// @file conditions.hpp
/// @brief Sampled verification of the structural growth conditions, the
///        Young-type inequalities, regime classification of the shipped
///        families, and admissibility checks for the modulus family lambda.
///
/// None of these checks prove a condition for all arguments; they falsify by
/// witness or confirm over a seeded, log-spaced sample plan. Divergence of
/// improper integrals and series is reported as "holds at truncation" with a
/// fitted growth statistic. Identical spec + seed reproduces every report bit
/// for bit (sequential reduction, hand-rolled sampling).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growth.hpp"

namespace orlicz::conditions {

enum class Verdict { Holds, Violated, Inconclusive };
const char* to_string(Verdict v);

struct Witness {
    double x1 = 0, y1 = 0, t1 = 0;
    double x2 = 0, y2 = 0, t2 = 0;
    double v = 0, w = 0, r = 0;
};

struct ConditionReport {
    std::string id;
    Verdict verdict = Verdict::Inconclusive;
    /// Max over samples of the normalized ratio (lhs over bound); > 1 violates.
    double worst_ratio = 0.0;
    std::optional<Witness> witness;
    long samples = 0;
    std::vector<std::pair<std::string, double>> constants;
    std::string detail;
};

struct SamplePlan {
    int v_points = 64;        ///< log-spaced v over [max(s0,1e-6), v_cap]
    int ratio_points = 16;    ///< log-spaced w/v over (1, ratio_cap]
    double v_cap = 1e6;
    double ratio_cap = 1e4;
    int x_points = 16;        ///< seeded points (or point pairs) in the ball
    std::uint64_t seed = 0x075bcd15ULL;
};

/// Upper growth bound g(x,w)/g(x,v) <= c1 (w/v)^{q-1} for w >= v > s0.
ConditionReport check_g1_elliptic(const GrowthSpec& spec, const SamplePlan& plan);

/// Lower growth bound g(x,w)/g(x,v) >= c7 (w/v)^{p-1} for w >= v > 0.
ConditionReport check_g3_lower(const GrowthSpec& spec, const SamplePlan& plan);

/// Spatial continuity g(x1,v/r) <= c2 e^{lambda(r)} g(x2,v/r) over point
/// pairs in B_r and v in [r, K]; also reports the minimal c2 over samples.
/// Radii must satisfy 8r <= domain radius.
ConditionReport check_g2_continuity(const GrowthSpec& spec, const LambdaSpec& lam, double K,
                                    const std::vector<double>& radii, const SamplePlan& plan);

enum class PsiRegime { Degenerate, Singular };

/// The two psi-ratio inequalities of the declared regime: the lower bound at
/// the domain center, the upper bound over the cylinder. Samples w >= v >
/// b0 R^{-delta}; R must be supplied when delta > 0.
ConditionReport check_psi_regime(const GrowthSpec& spec, PsiRegime regime, double R,
                                 const SamplePlan& plan);

/// Young-type inequalities
///   g(x,a) b <= eps g(x,a) a + g(x, b/eps) b
///   g(x,a) b <= eps^{-1} g(x,a) a + (eps^{p-1}/c7) g(x,b) b
/// over seeded (eps, a, b, x) samples.
ConditionReport check_young(const GrowthSpec& spec, const SamplePlan& plan,
                            long n_samples = 10000);

/// Re-evaluates the condition's inequality at a stored witness; returns the
/// normalized ratio (> 1 reproduces the violation). `lam` may be null for
/// checks that do not reference the modulus.
double recheck_witness(const ConditionReport& report, const GrowthSpec& spec,
                       const LambdaSpec* lam);

// ---------------------------------------------------------------------------

enum class Regime { Degenerate, Singular, BothExcluded };
const char* to_string(Regime r);

struct RegimeClassification {
    Regime regime = Regime::BothExcluded;
    Verdict verdict = Verdict::Inconclusive;  ///< Holds = decided; Inconclusive = no guess
    double mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;
    double delta = 0;
    double b0 = 0;
    std::optional<double> admissible_R;
    double r_residual = 0;  ///< |defining scalar equation| at admissible_R
    std::string note;
};

/// Maps the declared exponent ranges of the shipped families onto their
/// regime parameters; solves the admissible radius for the double-phase
/// family by bisection where the classification requires it. Undecidable
/// ranges yield an inconclusive verdict, never a guess.
RegimeClassification classify_example(const GrowthSpec& spec, const LambdaSpec& lam);

// ---------------------------------------------------------------------------

struct AdmissibilityReport {
    std::string id;
    Verdict doubling = Verdict::Inconclusive;
    Verdict divergence = Verdict::Inconclusive;
    Verdict vanishing = Verdict::Inconclusive;
    Verdict remark_bound = Verdict::Inconclusive;  ///< singular only
    Verdict overall = Verdict::Inconclusive;
    double truncation_radius = 0;  ///< smallest radius reached (ln for singular sequences)
    double partial_value = 0;      ///< partial integral / partial sum at truncation
    double divergence_slope = 0;   ///< fitted ln-increment per dyad (>= -0.05 passes)
    double vanishing_slope = 0;    ///< d(ln value)/d(ln r) on the tail (>= 0.05 passes)
    long terms = 0;                ///< sequence length (singular)
    std::string detail;
};

/// Doubling of exp(c Lambda) across dyadic scales, divergence of the
/// integral of exp(-c Lambda(beta,r)) dr/r at 0, and the vanishing limit
/// r exp(c Lambda(beta,r)) -> 0, all truncated at r_min.
AdmissibilityReport check_lambda_elliptic(const LambdaSpec& lam, double c, double beta,
                                          double rho0, double r_min);

/// Same with the (3/2)^{1-delta0} doubling allowance and the
/// r^{1-delta0}-weighted vanishing limit.
AdmissibilityReport check_lambda_parabolic_degenerate(const LambdaSpec& lam, double c,
                                                      double beta, double delta0, double R,
                                                      double r_min);

/// Doubling/vanishing for exp(8 Lambda1) plus divergence of the series
/// sum_i exp(-8 Lambda1(c,beta,r_i)) along r_i = cbar r_{i-1}
/// exp(-8 Lambda1(c,beta,r_{i-1})), with the partial sums checked against the
/// (i+1) * smallest-term lower bound and the r_1 >= rho^{gamma0} scale bound.
AdmissibilityReport check_lambda_parabolic_singular(const LambdaSpec& lam, double c, double beta,
                                                    double cbar, double delta0, double rho,
                                                    long max_terms);

}  // namespace orlicz::conditions
