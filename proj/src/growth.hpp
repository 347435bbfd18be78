/// @file growth.hpp
/// @brief Generalized Orlicz growth families g1..g4, their primitives and the
///        modulus helpers Lambda / Lambda1 built from a family lambda(r).
///
/// The four shipped families (v > 0):
///   g1(x,t,v) = v^{p(x,t)-1} + v^{q(x,t)-1}
///   g2(x,t,v) = v^{p(x,t)-1} (1 + ln(1+v))
///   g3(x,t,v) = v^{p-1} + a(x,t) v^{q-1},        a >= 0
///   g4(x,t,v) = v^{p-1} (1 + b(x,t) ln(1+v)),    b >= 0
/// plus a caller-supplied Custom family. All evaluators are pure; specs are
/// immutable after construction and safe to share across threads.
#pragma once

#include <functional>
#include <limits>
#include <string>

#include "numerics.hpp"

namespace orlicz {

enum class GrowthFamily { G1, G2, G3, G4, Custom };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Scalar exponent/coefficient field over the space-time domain.
using ScalarField = std::function<double(double x, double y, double t)>;

struct GrowthSpec {
    GrowthFamily family = GrowthFamily::G1;

    /// Declared exponent bounds. For G1/G2 the pointwise exponents live in
    /// [p, q] (G2: [p, p1]); for G3/G4, p and q are the exponents themselves.
    /// The library never infers these bounds from field samples.
    double p = 2.0;
    double q = 2.0;
    double p1 = 0.0;  ///< interior upper bound for p(x,t); 0 = unset
    double q1 = 0.0;  ///< interior lower bound for q(x,t); 0 = unset

    ScalarField p_field;  ///< exponent field for G1/G2; empty = constant p
    ScalarField q_field;  ///< exponent field for G1; empty = constant q
    ScalarField a_field;  ///< G3 coefficient, >= 0 wherever sampled
    ScalarField b_field;  ///< G4 coefficient, >= 0 wherever sampled
    std::function<double(double, double, double, double)> custom_g;  ///< (x,y,t,v)

    // Coefficient moduli: |a(z)-a(y)| <= a0 |z-y|^alpha e^{lambda}, etc.
    double a0 = 1.0;
    double b0coef = 1.0;
    double alpha = 1.0;

    // Structural constants of the growth/class conditions.
    double c1 = 1, c2 = 1, c3 = 2, c4 = 1, c5 = 1, c6 = 1, c7 = 1, c8 = 1, c9 = 1, c10 = 1;
    double mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;  // 0 = unset
    double s0 = 0;
    double b0 = 0;
    double delta = 0;
    double K = 1;  ///< parabolic cylinder constant; carried but inert in the displayed inequalities
    int n = 2;
    double M = 1;  ///< ess-sup bound on |u|

    // Evaluation domain: ball around `center`, time window around t0.
    Point center{0.5, 0.5};
    double t0 = 0.0;
    double domain_radius = 0.5;
    double time_radius = std::numeric_limits<double>::infinity();

    /// Checks the construction invariants; throws std::invalid_argument.
    void validate() const;

    bool inside_domain(double x, double y, double t) const;
};

/// g(x,t,v). Errors: v <= 0 (domain), (x,t) outside the declared domain
/// (domain), negative coefficient sample (invariant violation).
double eval_g(const GrowthSpec& spec, double x, double y, double t, double v);

/// G(x,t,z) = integral of g(x,t,s) ds over (0,z). Closed form for the pure
/// power parts; the log factors of G2/G4 use adaptive quadrature at relative
/// tolerance 1e-10 with the exponent frozen at the evaluation point.
double eval_G(const GrowthSpec& spec, double x, double y, double t, double z);

/// psi(x,t,v) = g(x,t,v) / v.
double eval_psi(const GrowthSpec& spec, double x, double y, double t, double v);

/// ln g(x,t,e^{log_v}), exact for the shipped families at arguments far
/// outside double range (the oscillation recursions drive v there). Custom
/// families are only evaluable where v itself is representable.
double log_g(const GrowthSpec& spec, double x, double y, double t, double log_v);

// ---------------------------------------------------------------------------

enum class LambdaFamily { Constant, TripleLog, QuadLogVariant, Custom };

/// A modulus family lambda(r), continuous, nonnegative and non-increasing on
/// (0, r_max). r_max is fixed at construction: for the nested-log families it
/// is the radius where the expression reaches zero (e^{-e} for the triple
/// log). The quadruple-log variant only rises above zero at radii far below
/// double range; on the representable domain it evaluates to exactly zero
/// (the nonnegative floor of the expression).
struct LambdaSpec {
    LambdaFamily family = LambdaFamily::Constant;
    double L = 0.0;
    double r_max = 1.0;
    std::function<double(double)> custom;

    static LambdaSpec constant(double L);
    static LambdaSpec triple_log(double L);
    static LambdaSpec quad_log_variant(double L);
    /// Custom family; samples the callable to check lambda >= 0 and
    /// non-increasing, throws std::invalid_argument on violation.
    static LambdaSpec custom_fn(std::function<double(double)> f, double r_max);
};

/// lambda(r); domain error outside (0, r_max).
double eval_lambda(const LambdaSpec& spec, double r);

/// lambda as a function of l = ln(1/r), for radii far below double range.
/// Custom families are only defined where r itself is representable.
double eval_lambda_logr(const LambdaSpec& spec, double log_inv_r);

/// Lambda(beta,r) = exp(beta * lambda(r)).
double eval_Lambda(const LambdaSpec& spec, double beta, double r);
double eval_Lambda_logr(const LambdaSpec& spec, double beta, double log_inv_r);

/// Lambda1(c,beta,r) = exp(c * Lambda(beta,r)); overflows double readily, so
/// the log form is the primary interface.
double log_Lambda1(const LambdaSpec& spec, double c, double beta, double r);
double log_Lambda1_logr(const LambdaSpec& spec, double c, double beta, double log_inv_r);
double eval_Lambda1(const LambdaSpec& spec, double c, double beta, double r);

}  // namespace orlicz
