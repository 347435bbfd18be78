/// @file iteration.hpp
/// @brief Fast-geometric convergence lemma, threshold constants, and the
///        oscillation-decay recursions that produce modulus-of-continuity
///        traces (elliptic, parabolic degenerate, parabolic singular).
///
/// Exp-of-exp quantities (Lambda1, tau1) and radii that shrink below double
/// range are carried as natural logs and only exponentiated on output with a
/// flag. The generic constant gamma of the underlying estimates is not
/// computable from the structural data; it is a user-supplied knob (default
/// 1) echoed in every trace header, so traces are bound *shapes*.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "growth.hpp"
#include "numerics.hpp"

namespace orlicz::iteration {

struct IterationParams {
    int n = 2;
    double gamma = 1.0;  ///< generic constant knob, >= 1
    double c = 1.0;      ///< exponent constant inside exp(c Lambda)
    double beta = 1.0;   ///< Lambda(beta, r) exponent
    double cbar = 1.0;   ///< singular radius recursion constant
    double c0 = 1.0;     ///< max{c2, c6} of the parabolic class
    double c4 = 1.0;
    double c5 = 1.0;
    double c10 = 1.0;
    double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0, mu4 = 0.0;
    double delta0 = 0.5;    ///< in (0,1)
    double delta = 0.0;     ///< threshold exponent from the psi conditions
    double deltabar = 0.0;  ///< 0 = use the strict default (see effective_deltabar)
    double M = 1.0;
    double s0 = 0.0;
    double b0 = 0.0;
    double xi = 0.5;   ///< in (0,1)
    double a = 0.5;    ///< in (0,1)
    double nu = 0.25;  ///< De Giorgi measure threshold, in (0,1)
    double nubar = 1.0;
    double R = 0.0;  ///< parent cylinder scale; 0 = derived as rho^{1/deltabar}
    bool elliptic_additive_floor = true;  ///< include the additive term in the elliptic trace

    double gamma0() const { return 2.0 - delta0; }
    /// The sections driving the degenerate and singular recursions state two
    /// different lower bounds for deltabar; the stricter max of both is used.
    double effective_deltabar() const;
    void validate() const;
};

enum class TraceKind { DeGiorgiY, EllipticOsc, ParabolicDegenerateOsc, ParabolicSingularOsc };
enum class Termination { Converged, FloorReached, MaxIter, Underflow };

const char* to_string(TraceKind k);
const char* to_string(Termination t);

struct TraceRow {
    long j = 0;
    LogValue radius{0};  // r_j or rho_j; unused for the De Giorgi rows
    LogValue value{0};   // omega_j or y_j
    LogValue theta{0};
    LogValue extra{0};  // floor_j / closed-form bound / theta-tilde, per kind
    bool has_radius = false, has_theta = false, has_extra = false;
};

struct IterationTrace {
    TraceKind kind = TraceKind::DeGiorgiY;
    std::vector<TraceRow> rows;
    Termination termination = Termination::MaxIter;
    /// Constants echoed at the head of the serialized trace, in order.
    std::vector<std::pair<std::string, double>> header;
    /// Closing oscillation bound for the parabolic traces (log space).
    LogValue final_bound{0};
    bool has_final_bound = false;
};

// --- fast-geometric convergence -------------------------------------------

struct DeGiorgiResult {
    double nu;             ///< threshold c^{-1/delta} b^{-1/delta^2}
    IterationTrace trace;  ///< rows: (j, y_j, closed-form bound in `extra`)
    bool converged;        ///< some emitted y_j fell at/below nu b^{-j/delta}
};

/// Iterates the extremal recursion y_{j+1} = c b^j y_j^{1+delta} and the
/// closed-form bound. The recursion is evaluated in extended precision in log
/// space: rounding errors amplify by (1+delta)^j, which double precision
/// cannot absorb at j ~ 40.
DeGiorgiResult degiorgi_lemma(double c, double b, double delta, double y0, int jmax);

/// Same recursion started at y0 = scale * nu with the threshold formed in
/// extended precision. A double-rounded nu drifts off the borderline
/// trajectory by (1+delta)^j times its rounding error, so sharpness runs
/// must start here rather than pass nu through a double.
DeGiorgiResult degiorgi_lemma_scaled(double c, double b, double delta, double scale, int jmax);

// --- elliptic --------------------------------------------------------------

struct EllipticThresholds {
    double nu1;    ///< gamma^{-1} (1-a)^n
    double jstar;  ///< 2 + log2(1/xi) + (gamma/nu1)^{(n-1)(c5+1)/(n c5)} e^{beta lambda(r/4)}
    double beta;   ///< 2 c4 (n-1)(c5+1) / (n c5)
};
EllipticThresholds elliptic_thresholds(const IterationParams& p, const LambdaSpec& lam, double r);

/// Oscillation bound at radius r from base radius rho:
///   2M exp(-gamma I) + gamma (1+s0) rho exp(c Lambda(beta,rho)),
/// I = integral of exp(-c Lambda(beta,t)) dt/t over (2r, rho), adaptive
/// quadrature at relative tolerance 1e-8. Requires 0 < 2r <= rho.
double elliptic_modulus(double rho, double r, const IterationParams& p, const LambdaSpec& lam);

/// Applies omega_{j+1} = (1 - exp(-gamma Lambda(beta,rho_j))) omega_j
///                        + gamma (1+s0) rho_j exp(gamma Lambda(beta,rho_j))
/// over rho_j = 2^{-j} rho. The additive term is dropped when
/// params.elliptic_additive_floor is false.
IterationTrace elliptic_oscillation_trace(double omega0, double rho, const IterationParams& p,
                                          const LambdaSpec& lam, int jmax);

// --- parabolic degenerate ---------------------------------------------------

struct DegenerateThresholds {
    double beta0, beta1, beta2;
    double sigma;         ///< slice fraction chosen before s
    double s;             ///< intermediate level exponent
    double s1;            ///< first level count
    double s_star_lower;  ///< s1 + gamma e^{beta2 lambda(rho)}
    double s_star_upper;  ///< log2(gamma 2^{s_lower} e^{beta0 lambda(rho)})
    double nubar;
};
/// Requires mu1 > 1 (beta1 is singular otherwise; reported as a regime
/// violation via std::domain_error).
DegenerateThresholds parabolic_degenerate_thresholds(const IterationParams& p,
                                                     const LambdaSpec& lam, double rho);

/// r_j = rho / 8^{j+1}; omega_{j+1} = (1 - exp(-gamma Lambda(beta,r_j))/2) omega_j;
/// theta_j = r_j^2 / psi(x0,t0, omega_j / (4 r_j)); floor_j = 4(1+b0) r_j^{1-delta0}
/// exp(gamma Lambda(beta,r_j)). Stops at the first floored row. The closing
/// bound is attached as final_bound.
IterationTrace parabolic_degenerate_trace(double omega0, double rho, const IterationParams& p,
                                          const GrowthSpec& spec, const LambdaSpec& lam,
                                          int jmax);

// --- parabolic singular ------------------------------------------------------

struct SingularThresholds {
    double eta;        ///< positivity level from gamma sigma^{-gamma} eta^{mu3} = 1/16
    LogValue epsilon;  ///< level ratio from (1+4 c10^2) eps^{mu3} = 2 sigma0
    double jstar;      ///< ceil(ln(nu e^{-c0(n+1)lambda}) / ln(1-sigma0)); may be inf
    LogValue sigma0;   ///< (1/4) exp(-(4 gamma/nu) e^{c0(n+2) lambda(rho)})
    LogValue tau1;     ///< gamma0^{-1} exp(-8 Lambda1(C,beta,rho))
    double C;          ///< 4 gamma / nu
    double beta;       ///< c0 (n+2)
};
SingularThresholds parabolic_singular_thresholds(const IterationParams& p, const LambdaSpec& lam,
                                                 double log_inv_rho);

/// rho_j = (1 - 1/(2 gamma0))/2 * rho_{j-1} tau1(rho_{j-1});
/// omega_j = max{(1 - tau1/2) omega_{j-1},
///               2 gamma0^2 (1+b0)/(2 gamma0 - 1) rho_{j-1}^{1-delta/deltabar}/tau1};
/// theta_j = rho_j^2/psi(x0,t0,omega_j/rho_j); extra column: theta-tilde at
/// the threshold level. rho is passed as ln(1/rho) so deep starts are exact.
IterationTrace parabolic_singular_trace(double omega0, double log_inv_rho,
                                        const IterationParams& p, const GrowthSpec& spec,
                                        const LambdaSpec& lam, int jmax);

// --- interior lemma thresholds ----------------------------------------------

/// Cylinder De Giorgi thresholds; `ratio` stands for
/// r xi omega / (theta g(xbar,tbar, xi omega / r)).
double parabolic_nu1(const IterationParams& p, double lambda_r, double ratio);
double parabolic_nu2(const IterationParams& p, double lambda_r, double ratio);

/// Serializes a trace to CSV: header comment lines with the echoed constants,
/// then rows "j,radius,omega,theta,floor,log_flags". A value whose magnitude
/// leaves double range is written as its natural log with the matching bit
/// set in log_flags (1=radius, 2=omega, 4=theta, 8=floor).
std::string trace_to_csv(const IterationTrace& trace);

}  // namespace orlicz::iteration
