#include "solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>

namespace orlicz::solver {

namespace {

struct EdgeCoeffs {
    // ax(i,j): edge between nodes (i,j)-(i+1,j), i in [0,nx-1], j in [0,ny]
    // ay(i,j): edge between nodes (i,j)-(i,j+1), i in [0,nx], j in [0,ny-1]
    std::vector<double> ax, ay;
    int nx = 0, ny = 0;
    double max_flux = 0;

    double& axr(int i, int j) { return ax[static_cast<std::size_t>(j) * nx + i]; }
    double axr(int i, int j) const { return ax[static_cast<std::size_t>(j) * nx + i]; }
    double& ayr(int i, int j) { return ay[static_cast<std::size_t>(j) * (nx + 1) + i]; }
    double ayr(int i, int j) const { return ay[static_cast<std::size_t>(j) * (nx + 1) + i]; }
};

double dy_at_node(const GridField& u, int i, int j) {
    if (j == 0) return (u.at(i, 1) - u.at(i, 0)) / u.hy;
    if (j == u.ny) return (u.at(i, u.ny) - u.at(i, u.ny - 1)) / u.hy;
    return (u.at(i, j + 1) - u.at(i, j - 1)) / (2.0 * u.hy);
}

double dx_at_node(const GridField& u, int i, int j) {
    if (i == 0) return (u.at(1, j) - u.at(0, j)) / u.hx;
    if (i == u.nx) return (u.at(u.nx, j) - u.at(u.nx - 1, j)) / u.hx;
    return (u.at(i + 1, j) - u.at(i - 1, j)) / (2.0 * u.hx);
}

/// Frozen nonlinear coefficients a_e = g(x_e,|grad u|_e)/max(|grad u|_e,eps)
/// on all edges touching the interior.
EdgeCoeffs edge_coefficients(const GrowthSpec& spec, const GridField& u, double t, double eps_reg) {
    EdgeCoeffs e;
    e.nx = u.nx;
    e.ny = u.ny;
    e.ax.assign(static_cast<std::size_t>(u.nx) * (u.ny + 1), 0.0);
    e.ay.assign(static_cast<std::size_t>(u.nx + 1) * u.ny, 0.0);
    for (int j = 0; j <= u.ny; ++j)
        for (int i = 0; i < u.nx; ++i) {
            const double along = (u.at(i + 1, j) - u.at(i, j)) / u.hx;
            const double trans = 0.5 * (dy_at_node(u, i, j) + dy_at_node(u, i + 1, j));
            const double mag = std::max(std::hypot(along, trans), eps_reg);
            const double g = eval_g(spec, u.x(i) + 0.5 * u.hx, u.y(j), t, mag);
            e.axr(i, j) = g / mag;
            e.max_flux = std::max(e.max_flux, g / mag * std::abs(along));
        }
    for (int j = 0; j < u.ny; ++j)
        for (int i = 0; i <= u.nx; ++i) {
            const double along = (u.at(i, j + 1) - u.at(i, j)) / u.hy;
            const double trans = 0.5 * (dx_at_node(u, i, j) + dx_at_node(u, i, j + 1));
            const double mag = std::max(std::hypot(along, trans), eps_reg);
            const double g = eval_g(spec, u.x(i), u.y(j) + 0.5 * u.hy, t, mag);
            e.ayr(i, j) = g / mag;
            e.max_flux = std::max(e.max_flux, g / mag * std::abs(along));
        }
    return e;
}

/// max |time_term + div(flux)| over interior nodes with the given
/// coefficients; `shift` adds (u - u_prev)/dt for the evolution residual.
double interior_residual(const GridField& u, const EdgeCoeffs& e, const GridField* u_prev,
                         double inv_dt) {
    double worst = 0.0;
    for (int j = 1; j < u.ny; ++j)
        for (int i = 1; i < u.nx; ++i) {
            const double div_flux =
                (e.axr(i, j) * (u.at(i + 1, j) - u.at(i, j)) -
                 e.axr(i - 1, j) * (u.at(i, j) - u.at(i - 1, j))) /
                    (u.hx * u.hx) +
                (e.ayr(i, j) * (u.at(i, j + 1) - u.at(i, j)) -
                 e.ayr(i, j - 1) * (u.at(i, j) - u.at(i, j - 1))) /
                    (u.hy * u.hy);
            double r = div_flux;
            if (u_prev) r -= (u.at(i, j) - u_prev->at(i, j)) * inv_dt;
            worst = std::max(worst, std::abs(r));
        }
    return worst;
}

/// Frozen-coefficient SPD five-point solver; the factorization is reused
/// across Picard iterations and time steps while the coefficients are
/// bit-identical (always the case for gradient-independent growth).
struct FrozenSolver {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    std::vector<double> ax_cache, ay_cache;
    double inv_dt_cache = std::numeric_limits<double>::quiet_NaN();
    bool ready = false;

    void solve(const EdgeCoeffs& e, const GridField& u, const GridField* u_prev, double inv_dt,
               GridField& out) {
        const int nx = u.nx, ny = u.ny;
        const int nun = (nx - 1) * (ny - 1);
        auto index = [nx](int i, int j) { return (j - 1) * (nx - 1) + (i - 1); };
        const double ix2 = 1.0 / (u.hx * u.hx), iy2 = 1.0 / (u.hy * u.hy);

        const bool reuse = ready && inv_dt == inv_dt_cache && ax_cache == e.ax &&
                           ay_cache == e.ay;
        if (!reuse) {
            std::vector<Eigen::Triplet<double>> trips;
            trips.reserve(static_cast<std::size_t>(nun) * 5);
            for (int j = 1; j < ny; ++j)
                for (int i = 1; i < nx; ++i) {
                    const int id = index(i, j);
                    const double aE = e.axr(i, j) * ix2, aW = e.axr(i - 1, j) * ix2;
                    const double aN = e.ayr(i, j) * iy2, aS = e.ayr(i, j - 1) * iy2;
                    trips.emplace_back(id, id, aE + aW + aN + aS + inv_dt);
                    if (i + 1 < nx) trips.emplace_back(id, index(i + 1, j), -aE);
                    if (i - 1 > 0) trips.emplace_back(id, index(i - 1, j), -aW);
                    if (j + 1 < ny) trips.emplace_back(id, index(i, j + 1), -aN);
                    if (j - 1 > 0) trips.emplace_back(id, index(i, j - 1), -aS);
                }
            Eigen::SparseMatrix<double> A(nun, nun);
            A.setFromTriplets(trips.begin(), trips.end());
            ldlt.compute(A);
            if (ldlt.info() != Eigen::Success)
                throw NumericalError("solver: frozen-coefficient system is not factorizable");
            ax_cache = e.ax;
            ay_cache = e.ay;
            inv_dt_cache = inv_dt;
            ready = true;
        }

        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nun);
        for (int j = 1; j < ny; ++j)
            for (int i = 1; i < nx; ++i) {
                const int id = index(i, j);
                if (u_prev) rhs(id) += u_prev->at(i, j) * inv_dt;
                if (i + 1 == nx) rhs(id) += e.axr(i, j) * ix2 * u.at(nx, j);
                if (i - 1 == 0) rhs(id) += e.axr(i - 1, j) * ix2 * u.at(0, j);
                if (j + 1 == ny) rhs(id) += e.ayr(i, j) * iy2 * u.at(i, ny);
                if (j - 1 == 0) rhs(id) += e.ayr(i, j - 1) * iy2 * u.at(i, 0);
            }
        const Eigen::VectorXd sol = ldlt.solve(rhs);
        out = u;
        for (int j = 1; j < ny; ++j)
            for (int i = 1; i < nx; ++i) out.at(i, j) = sol(index(i, j));
    }
};

GridField make_field(const GridExtents& ext) {
    GridField f;
    f.nx = ext.nx;
    f.ny = ext.ny;
    f.hx = ext.lx / ext.nx;
    f.hy = ext.ly / ext.ny;
    f.ox = ext.ox;
    f.oy = ext.oy;
    f.values.assign(static_cast<std::size_t>(ext.nx + 1) * (ext.ny + 1), 0.0);
    return f;
}

/// Damped Picard on the frozen-coefficient systems. u holds boundary values
/// already; interior entries are the initial guess.
void picard(const GrowthSpec& spec, GridField& u, const GridField* u_prev, double inv_dt,
            double t, const SolveConfig& cfg, FrozenSolver& frozen, SolveStats& stats) {
    stats = SolveStats{};
    double damping = cfg.damping;
    double prev_res = std::numeric_limits<double>::infinity();
    GridField lin = u;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        const EdgeCoeffs e = edge_coefficients(spec, u, t, cfg.eps_reg);
        double umax = 0, amax = 0;
        for (double v : u.values) umax = std::max(umax, std::abs(v));
        for (double a : e.ax) amax = std::max(amax, a);
        for (double a : e.ay) amax = std::max(amax, a);
        const double ih2 = 1.0 / (u.hx * u.hx) + 1.0 / (u.hy * u.hy);
        double scale = e.max_flux * (1.0 / u.hx + 1.0 / u.hy);
        if (u_prev) scale = std::max(scale, umax * inv_dt);
        // Rounding floor: coefficient * value noise through the stencil.
        const double floor = (amax * ih2 + inv_dt) * umax * 1e-13;

        const double res = interior_residual(u, e, u_prev, inv_dt);
        stats.iterations = it;
        stats.residual = res;
        stats.residual_history.push_back(res);
        if (res <= std::max(cfg.tolerance * std::max(scale, 1e-30), floor)) return;
        if (res > prev_res) damping = std::max(0.05, damping * 0.7);
        prev_res = res;

        frozen.solve(e, u, u_prev, inv_dt, lin);
        for (int j = 1; j < u.ny; ++j)
            for (int i = 1; i < u.nx; ++i)
                u.at(i, j) += damping * (lin.at(i, j) - u.at(i, j));
    }
    throw NumericalError("solver: Picard iteration did not reach tolerance in " +
                         std::to_string(cfg.max_iterations) + " iterations (residual " +
                         std::to_string(stats.residual) + ")");
}

}  // namespace

void SolveConfig::validate() const {
    if (!(eps_reg > 0)) throw std::invalid_argument("solver: eps_reg > 0");
    if (!(damping > 0 && damping <= 1)) throw std::invalid_argument("solver: damping in (0,1]");
    if (!(tolerance > 0)) throw std::invalid_argument("solver: tolerance > 0");
    if (max_iterations < 1) throw std::invalid_argument("solver: max_iterations >= 1");
    if (!(dt > 0)) throw std::invalid_argument("solver: dt > 0");
}

GridField solve_elliptic(const GrowthSpec& spec, const BoundaryFn& boundary,
                         const GridExtents& ext, const SolveConfig& cfg, SolveStats* stats) {
    spec.validate();
    cfg.validate();
    if (!boundary) throw std::invalid_argument("solver: boundary data required");
    GridField u = make_field(ext);

    double bc_sum = 0;
    long bc_count = 0;
    for (int j = 0; j <= u.ny; ++j)
        for (int i = 0; i <= u.nx; ++i) {
            if (i == 0 || i == u.nx || j == 0 || j == u.ny) {
                u.at(i, j) = boundary(u.x(i), u.y(j));
                bc_sum += u.at(i, j);
                ++bc_count;
            }
        }
    const double bc_mean = bc_sum / bc_count;
    for (int j = 1; j < u.ny; ++j)
        for (int i = 1; i < u.nx; ++i) u.at(i, j) = bc_mean;

    FrozenSolver frozen;
    SolveStats local;
    picard(spec, u, nullptr, 0.0, spec.t0, cfg, frozen, stats ? *stats : local);
    return u;
}

ParabolicResult solve_parabolic(const GrowthSpec& spec, const BoundaryFn& initial,
                                const BoundaryFn& boundary, const GridExtents& ext, double t_end,
                                const SolveConfig& cfg) {
    spec.validate();
    cfg.validate();
    if (!initial || !boundary) throw std::invalid_argument("solver: initial and boundary data required");
    if (!(t_end > 0)) throw std::invalid_argument("solver: t_end > 0");

    ParabolicResult out;
    GridField u = make_field(ext);
    for (int j = 0; j <= u.ny; ++j)
        for (int i = 0; i <= u.nx; ++i) {
            u.at(i, j) = initial(u.x(i), u.y(j));
            if (i == 0 || i == u.nx || j == 0 || j == u.ny) {
                const double b = boundary(u.x(i), u.y(j));
                if (std::abs(b - u.at(i, j)) > 1e-8 * std::max(1.0, std::abs(b)))
                    throw std::invalid_argument(
                        "solver: initial data inconsistent with boundary at t = 0");
                u.at(i, j) = b;
            }
        }

    const long steps = static_cast<long>(std::ceil(t_end / cfg.dt - 1e-12));
    FrozenSolver frozen;
    GridField prev = u;
    for (long n = 0; n < steps; ++n) {
        const double t_next = std::min((n + 1) * cfg.dt, t_end);
        prev = u;
        try {
            SolveStats st;
            picard(spec, u, &prev, 1.0 / cfg.dt, spec.t0 + t_next, cfg, frozen, st);
            out.total_picard_iterations += st.iterations;
        } catch (const NumericalError& err) {
            throw NumericalError(std::string(err.what()) + " at time step " + std::to_string(n));
        }
        if (cfg.snapshot_every > 0 && (n + 1) % cfg.snapshot_every == 0 && n + 1 < steps) {
            out.snapshots.push_back(u);
            out.times.push_back(t_next);
        }
    }
    out.snapshots.push_back(u);
    out.times.push_back(steps * cfg.dt);
    out.field = u;
    return out;
}

FluxBalance flux_balance(const GrowthSpec& spec, const GridField& u, double t, double eps_reg) {
    u.validate();
    const EdgeCoeffs e = edge_coefficients(spec, u, t, eps_reg);
    FluxBalance fb;
    for (int j = 1; j < u.ny; ++j)
        for (int i = 1; i < u.nx; ++i) {
            const double div_flux =
                (e.axr(i, j) * (u.at(i + 1, j) - u.at(i, j)) -
                 e.axr(i - 1, j) * (u.at(i, j) - u.at(i - 1, j))) /
                    (u.hx * u.hx) +
                (e.ayr(i, j) * (u.at(i, j + 1) - u.at(i, j)) -
                 e.ayr(i, j - 1) * (u.at(i, j) - u.at(i, j - 1))) /
                    (u.hy * u.hy);
            fb.interior_divergence_sum += div_flux * u.hx * u.hy;
        }
    for (int j = 1; j < u.ny; ++j) {
        fb.boundary_flux += (e.axr(u.nx - 1, j) * (u.at(u.nx, j) - u.at(u.nx - 1, j)) / u.hx -
                             e.axr(0, j) * (u.at(1, j) - u.at(0, j)) / u.hx) *
                            u.hy;
    }
    for (int i = 1; i < u.nx; ++i) {
        fb.boundary_flux += (e.ayr(i, u.ny - 1) * (u.at(i, u.ny) - u.at(i, u.ny - 1)) / u.hy -
                             e.ayr(i, 0) * (u.at(i, 1) - u.at(i, 0)) / u.hy) *
                            u.hx;
    }
    return fb;
}

// --- discrete diagnostics --------------------------------------------------------

namespace {

struct Cell {
    double x, y, u, gx, gy, zeta, dist;
};

std::vector<Cell> collect_cells(const GridField& f, Point center, double rho,
                                const CutoffSpec* cut) {
    std::vector<Cell> cells;
    for (int j = 0; j < f.ny; ++j)
        for (int i = 0; i < f.nx; ++i) {
            const double cx = f.x(i) + 0.5 * f.hx, cy = f.y(j) + 0.5 * f.hy;
            const double dist = std::hypot(cx - center.x, cy - center.y);
            if (dist >= rho) continue;
            Cell c;
            c.x = cx;
            c.y = cy;
            c.dist = dist;
            c.u = 0.25 * (f.at(i, j) + f.at(i + 1, j) + f.at(i, j + 1) + f.at(i + 1, j + 1));
            c.gx = 0.5 * ((f.at(i + 1, j) + f.at(i + 1, j + 1)) - (f.at(i, j) + f.at(i, j + 1))) /
                   f.hx;
            c.gy = 0.5 * ((f.at(i, j + 1) + f.at(i + 1, j + 1)) - (f.at(i, j) + f.at(i + 1, j))) /
                   f.hy;
            c.zeta = cut ? cut->eval(cx, cy) : 1.0;
            cells.push_back(c);
        }
    return cells;
}

struct SidePredicate {
    const GrowthSpec* spec;
    const std::vector<Cell>* cells;
    double area, k, l, eps, sigma, rho, lam_rho;
    Point center;
    bool plus;

    // (u-k)_+ for the plus side at level k; (u-l)_- for the minus side.
    double excess(const Cell& c) const { return plus ? std::max(c.u - k, 0.0) : std::max(l - c.u, 0.0); }
    bool in_strip(const Cell& c) const { return plus ? (c.u > k && c.u <= l) : (c.u >= k && c.u < l); }

    double level_sup() const {
        double m = 0;
        for (const Cell& c : *cells) m = std::max(m, excess(c));
        return m;
    }

    double lhs() const {
        double s = 0;
        for (const Cell& c : *cells)
            if (in_strip(c)) s += std::hypot(c.gx, c.gy) * std::pow(c.zeta, spec->c3) * area;
        return s;
    }

    double rhs(double K1, double M_side) const {
        double strip_area = 0;
        for (const Cell& c : *cells)
            if (in_strip(c)) strip_area += area;
        const double first = K1 * std::exp(spec->c4 * lam_rho) / eps * (M_side / rho) * strip_area;
        if (K1 == 0.0) return first;
        const double g0 = eval_g(*spec, center.x, center.y, spec->t0, M_side / rho);
        double integral = 0;
        for (const Cell& c : *cells) {
            const double ex = excess(c);
            if (ex <= 0.0 || c.zeta <= 0.0) continue;
            const double v = K1 * ex / (sigma * rho * c.zeta);
            integral += eval_g(*spec, c.x, c.y, spec->t0, v) * (ex / rho) *
                        std::pow(c.zeta, spec->c3 - 1.0) * area;
        }
        const double second =
            K1 * std::pow(eps, spec->c5) * std::pow(sigma, -spec->c6) / g0 * integral;
        return first + second;
    }
};

}  // namespace

K1Report estimate_k1(const GridField& field, const GrowthSpec& spec, const LambdaSpec& lam,
                     const K1Plan& plan) {
    field.validate();
    spec.validate();
    if (!(plan.rho > 0) || plan.levels < 1) throw std::invalid_argument("estimate_k1: bad plan");
    const double lam_rho = eval_lambda(lam, plan.rho);
    const double area = field.hx * field.hy;

    K1Report rep;
    std::vector<Cell> cells = collect_cells(field, plan.center, plan.rho, nullptr);
    if (cells.empty()) throw std::invalid_argument("estimate_k1: ball contains no cells");

    std::vector<double> vals;
    vals.reserve(cells.size());
    for (const Cell& c : cells) vals.push_back(c.u);
    std::sort(vals.begin(), vals.end());
    const double gap = (vals.back() - vals.front()) / (plan.levels + 1);

    for (int li = 1; li <= plan.levels; ++li) {
        const double k = vals[static_cast<std::size_t>(
            (vals.size() - 1) * li / (plan.levels + 1))];
        const double l = k + gap;
        if (!(std::abs(k) < spec.M) || !(std::abs(l) < spec.M)) continue;
        if (!(l > k)) continue;
        for (double eps : plan.eps_values)
            for (double sigma : plan.sigma_values)
                for (bool plus : {true, false}) {
                    CutoffSpec cut{plan.center, plan.rho, sigma, spec.c3};
                    std::vector<Cell> zcells = cells;
                    for (Cell& c : zcells) c.zeta = cut.eval(c.x, c.y);
                    SidePredicate pred{&spec,  &zcells, area, k,   l,
                                       eps,    sigma,   plan.rho, lam_rho,
                                       plan.center, plus};
                    const double M_side = pred.level_sup();
                    if (M_side < plan.rho) continue;  // inequality not in force
                    ++rep.admissible;
                    const double lhs = pred.lhs();
                    K1Sample sample;
                    sample.k = k;
                    sample.l = l;
                    sample.eps = eps;
                    sample.sigma = sigma;
                    sample.plus_side = plus;
                    sample.lhs = lhs;
                    if (lhs <= 0.0) {
                        sample.K1 = 0.0;
                        sample.rhs = 0.0;
                        rep.samples.push_back(sample);
                        continue;
                    }
                    double hi = 1.0;
                    while (pred.rhs(hi, M_side) < lhs && hi < 1e15) hi *= 4.0;
                    double lo = 0.0;
                    for (int it = 0; it < 80; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        if (pred.rhs(mid, M_side) >= lhs)
                            hi = mid;
                        else
                            lo = mid;
                    }
                    sample.K1 = hi;
                    sample.rhs = pred.rhs(hi, M_side);
                    rep.samples.push_back(sample);
                    rep.K1 = std::max(rep.K1, hi);
                }
    }
    rep.conclusive = rep.admissible > 0;
    return rep;
}

DgPoincareResult check_dg_poincare(const GridField& field, Point center, double rho, double k,
                                   double l) {
    field.validate();
    if (!(l > k)) throw std::invalid_argument("dg_poincare: need k < l");
    const double area = field.hx * field.hy;
    std::vector<Cell> cells = collect_cells(field, center, rho, nullptr);
    if (cells.empty()) throw std::invalid_argument("dg_poincare: ball contains no cells");

    double below_k = 0, complement_l = 0, strip_grad = 0;
    for (const Cell& c : cells) {
        if (c.u < k) below_k += area;
        if (c.u >= l) complement_l += area;
        if (c.u >= k && c.u < l) strip_grad += std::hypot(c.gx, c.gy) * area;
    }
    DgPoincareResult res;
    res.lhs = (l - k) * std::sqrt(below_k);  // n = 2: |A|^{1-1/n} = |A|^{1/2}
    if (complement_l <= 0.0) {
        res.conclusive = false;  // inequality is vacuous
        return res;
    }
    res.rhs_core = rho * rho / complement_l * strip_grad;
    res.conclusive = true;
    res.implied_c = res.rhs_core > 0 ? res.lhs / res.rhs_core
                                     : (res.lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    return res;
}

ModulusReport empirical_modulus(const std::vector<const GridField*>& fields, Point center,
                                const std::vector<double>& radii,
                                const iteration::IterationParams& params, const LambdaSpec& lam) {
    if (fields.empty()) throw std::invalid_argument("empirical_modulus: no fields");
    if (radii.size() < 2) throw std::invalid_argument("empirical_modulus: need >= 2 radii");
    std::vector<double> sorted = radii;
    std::sort(sorted.begin(), sorted.end());

    ModulusReport rep;
    rep.curve = measure_oscillation(*fields.back(), center, sorted);
    for (std::size_t i = 1; i < rep.curve.size(); ++i)
        if (rep.curve[i].osc < rep.curve[i - 1].osc - 1e-14) rep.monotone = false;

    rep.zero_oscillation = true;
    std::vector<double> lx, ly;
    for (const OscPoint& p : rep.curve)
        if (p.osc > 1e-14) {
            rep.zero_oscillation = false;
            lx.push_back(std::log(p.r));
            ly.push_back(std::log(p.osc));
        }
    rep.fitted_slope = rep.zero_oscillation ? 0.0 : fit_slope(lx, ly);

    if (fields.size() >= 2) {
        const auto coarse = measure_oscillation(*fields[fields.size() - 2], center, sorted);
        for (std::size_t i = 0; i < rep.curve.size(); ++i) {
            const double denom = std::max(std::abs(rep.curve[i].osc), 1e-14);
            rep.refinement_drift =
                std::max(rep.refinement_drift, std::abs(rep.curve[i].osc - coarse[i].osc) / denom);
        }
    }

    // smallest generic constant whose oscillation bound dominates the curve
    const double rho = sorted.back();
    rep.gamma_min = std::numeric_limits<double>::infinity();
    for (int gi = 0; gi <= 60; ++gi) {
        const double gamma = std::pow(10.0, -3.0 + 6.0 * gi / 60.0);
        iteration::IterationParams p = params;
        p.gamma = gamma;
        bool dominates = true;
        for (const OscPoint& pt : rep.curve) {
            if (2.0 * pt.r > rho) continue;
            if (iteration::elliptic_modulus(rho, pt.r, p, lam) < pt.osc * (1.0 - 1e-12)) {
                dominates = false;
                break;
            }
        }
        if (dominates) {
            rep.gamma_min = gamma;
            break;
        }
    }
    return rep;
}

}  // namespace orlicz::solver
