/// @file solver.hpp
/// @brief Finite-difference solvers for the stationary and evolution
///        equations driven by a growth family, plus discrete diagnostics:
///        oscillation decay, the minimal-K1 energy-inequality estimator, and
///        the sub-level-set Poincare checker.
///
/// Space discretization is a five-point finite-volume stencil with the flux
///   g(x_edge, |grad u|_edge) / max(|grad u|_edge, eps_reg) * du/dh
/// on staggered edges; |grad u| at an edge combines the along-edge difference
/// with the averaged transverse difference. The nonlinearity is resolved by
/// damped Picard (frozen coefficients); time stepping is implicit Euler with
/// an inner Picard loop per step.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "grid.hpp"
#include "growth.hpp"
#include "iteration.hpp"

namespace orlicz::solver {

struct SolveConfig {
    double eps_reg = 1e-8;    ///< gradient regularization in the flux quotient
    double damping = 0.5;     ///< Picard damping in (0,1]
    double tolerance = 1e-9;  ///< residual tolerance relative to the flux scale
    int max_iterations = 200;
    double dt = 1e-3;      ///< parabolic time step
    int snapshot_every = 0;  ///< parabolic: keep every n-th step (0 = final only)

    void validate() const;
};

struct GridExtents {
    int nx = 32, ny = 32;
    double ox = 0, oy = 0;
    double lx = 1, ly = 1;
};

using BoundaryFn = std::function<double(double x, double y)>;

struct SolveStats {
    int iterations = 0;
    double residual = 0;
    std::vector<double> residual_history;
};

/// Dirichlet problem for div(flux) = 0. Throws NumericalError with the
/// residual history attached to `stats` when Picard stalls.
GridField solve_elliptic(const GrowthSpec& spec, const BoundaryFn& boundary,
                         const GridExtents& grid, const SolveConfig& cfg,
                         SolveStats* stats = nullptr);

struct ParabolicResult {
    GridField field;  ///< state at the final time
    std::vector<double> times;
    std::vector<GridField> snapshots;
    int total_picard_iterations = 0;
};

/// Implicit Euler for u_t = div(flux) with Dirichlet boundary; initial data
/// must agree with the boundary values at t = 0.
ParabolicResult solve_parabolic(const GrowthSpec& spec, const BoundaryFn& initial,
                                const BoundaryFn& boundary, const GridExtents& grid, double t_end,
                                const SolveConfig& cfg);

// --- discrete class diagnostics ------------------------------------------------

struct FluxBalance {
    double interior_divergence_sum = 0;  ///< sum of div(flux) * cell area over interior nodes
    double boundary_flux = 0;            ///< net flux through the edges adjacent to the boundary
};

/// Telescoping identity of the discrete divergence: the interior divergence
/// sum equals the net flux through the outermost edge layer.
FluxBalance flux_balance(const GrowthSpec& spec, const GridField& u, double t, double eps_reg);

struct K1Sample {
    double k = 0, l = 0, eps = 0, sigma = 0;
    bool plus_side = true;
    double K1 = 0;
    double lhs = 0, rhs = 0;  ///< both sides at the returned K1
};

struct K1Plan {
    Point center{0.5, 0.5};
    double rho = 0.25;
    int levels = 8;  ///< quantile-spaced level values
    std::vector<double> eps_values{1.0, 0.5, 0.1};
    std::vector<double> sigma_values{0.25, 0.5};
};

struct K1Report {
    double K1 = 0;  ///< max of the per-sample minimal constants
    std::vector<K1Sample> samples;
    long admissible = 0;  ///< samples passing the M_{+-} >= rho gate
    bool conclusive = false;
};

/// Least K1 making the discrete level-set energy inequalities hold for each
/// sampled (level, eps, sigma) on both the super- and sub-level sides, with
/// the quartic cutoff fixed by CutoffSpec. All integrals are midpoint sums
/// over grid cells, gradients central differences at cell centers. Both
/// right-hand terms are nondecreasing in K1, so the per-sample search is a
/// bisection.
K1Report estimate_k1(const GridField& field, const GrowthSpec& spec, const LambdaSpec& lam,
                     const K1Plan& plan);

struct DgPoincareResult {
    double lhs = 0;       ///< (l-k) |{u < k}|^{1-1/n}
    double rhs_core = 0;  ///< rho^n / |B \ {u < l}| * integral of |grad u| over the strip
    double implied_c = 0;
    bool conclusive = false;  ///< false when the complement set is empty
};

/// Discrete sub-level-set Poincare inequality on the ball B_rho(center).
DgPoincareResult check_dg_poincare(const GridField& field, Point center, double rho, double k,
                                   double l);

struct ModulusReport {
    std::vector<OscPoint> curve;  ///< measured on the finest field
    double fitted_slope = 0;      ///< d log osc / d log r
    bool monotone = true;
    bool zero_oscillation = false;
    double refinement_drift = 0;  ///< max relative osc change between the last two fields
    double gamma_min = 0;         ///< smallest gamma whose bound dominates the curve
};

/// Fits the measured oscillation decay on a refinement sequence of fields and
/// reports the smallest generic constant for which the oscillation bound
/// dominates the measured curve (base radius = largest measured radius).
ModulusReport empirical_modulus(const std::vector<const GridField*>& fields, Point center,
                                const std::vector<double>& radii,
                                const iteration::IterationParams& params, const LambdaSpec& lam);

}  // namespace orlicz::solver
