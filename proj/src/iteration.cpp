#include "iteration.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace orlicz::iteration {

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

const char* to_string(TraceKind k) {
    switch (k) {
        case TraceKind::DeGiorgiY: return "degiorgi-y";
        case TraceKind::EllipticOsc: return "elliptic-osc";
        case TraceKind::ParabolicDegenerateOsc: return "parabolic-degenerate-osc";
        case TraceKind::ParabolicSingularOsc: return "parabolic-singular-osc";
    }
    return "?";
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::Converged: return "converged";
        case Termination::FloorReached: return "floor-reached";
        case Termination::MaxIter: return "max-iter";
        case Termination::Underflow: return "underflow";
    }
    return "?";
}

double IterationParams::effective_deltabar() const {
    const double strict = std::max({delta / delta0, 1.0 + delta, 1.0 + delta0});
    if (deltabar > 0.0) return deltabar;
    return strict + 0.5;
}

void IterationParams::validate() const {
    // The generic constant is only positive; the thresholds lemma example
    // calibrates it below 1, so no lower bound of 1 is enforced.
    if (!(gamma > 0.0)) throw std::invalid_argument("iteration: gamma > 0");
    if (!(delta0 > 0.0 && delta0 < 1.0)) throw std::invalid_argument("iteration: delta0 in (0,1)");
    if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("iteration: xi in (0,1)");
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("iteration: a in (0,1)");
    if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("iteration: nu in (0,1]");
    if (!(nubar > 0.0 && nubar <= 1.0)) throw std::invalid_argument("iteration: nubar in (0,1]");
    if (n < 2) throw std::invalid_argument("iteration: n >= 2");
    for (double v : {c, beta, cbar, c0, c4, c5, c10})
        if (!(v > 0.0)) throw std::invalid_argument("iteration: positive constants required");
    if (!(M > 0.0)) throw std::invalid_argument("iteration: M > 0");
    if (s0 < 0.0 || b0 < 0.0 || delta < 0.0)
        throw std::invalid_argument("iteration: s0, b0, delta >= 0");
    if (deltabar > 0.0) {
        const double strict = std::max({delta / delta0, 1.0 + delta, 1.0 + delta0});
        if (!(deltabar > strict))
            throw std::invalid_argument("iteration: deltabar must exceed max{delta/delta0, 1+delta, 1+delta0}");
    }
}

// --- fast-geometric convergence ---------------------------------------------

namespace {

DeGiorgiResult degiorgi_run(double c, double b, double delta, __float128 L0, double y0_echo,
                            int jmax) {
    if (!(c > 1.0) || !(b > 1.0) || !(delta > 0.0))
        throw std::invalid_argument("degiorgi_lemma: need c > 1, b > 1, delta > 0");
    if (jmax < 0) throw std::invalid_argument("degiorgi_lemma: jmax >= 0");

    const __float128 lc = logq(c);
    const __float128 lb = logq(b);
    const __float128 d = delta;
    const __float128 lnu = -lc / d - lb / (d * d);

    DeGiorgiResult res;
    res.nu = static_cast<double>(expq(lnu));
    res.trace.kind = TraceKind::DeGiorgiY;
    res.trace.header = {{"c", c}, {"b", b}, {"delta", delta}, {"y0", y0_echo}, {"nu", res.nu}};
    res.converged = false;

    __float128 L = L0;
    const __float128 ly0 = L;
    __float128 growth = 1;  // (1+delta)^j
    bool exploded = false;
    for (long j = 0; j <= jmax; ++j) {
        const __float128 bound =
            ((growth - 1) / d) * lc + ((growth - 1) / (d * d) - (__float128)j / d) * lb +
            growth * ly0;
        TraceRow row;
        row.j = j;
        row.value = LogValue::from_log(static_cast<double>(L));
        row.extra = LogValue::from_log(static_cast<double>(bound));
        row.has_extra = true;
        res.trace.rows.push_back(row);

        // y_j at/below nu b^{-j/delta} restarts the lemma from scratch at
        // index j, so the tail provably goes to zero.
        const double threshold = static_cast<double>(lnu - ((__float128)j / d) * lb);
        if (static_cast<double>(L) <= threshold + 1e-9) res.converged = true;

        if (static_cast<double>(L) > 1e300) {
            exploded = true;
            break;
        }
        L = lc + (__float128)j * lb + (1 + d) * L;
        growth *= (1 + d);
        if (static_cast<double>(growth) > 1e300) {
            exploded = true;  // exponent factor itself leaving double range
            break;
        }
    }
    res.trace.termination = res.converged
                                ? Termination::Converged
                                : (exploded ? Termination::Underflow : Termination::MaxIter);
    return res;
}

}  // namespace

DeGiorgiResult degiorgi_lemma(double c, double b, double delta, double y0, int jmax) {
    if (!(y0 >= 0.0) || !std::isfinite(y0))
        throw std::invalid_argument("degiorgi_lemma: y0 must be finite and >= 0");
    const __float128 L0 = (y0 > 0.0) ? logq(y0) : -HUGE_VALQ;
    return degiorgi_run(c, b, delta, L0, y0, jmax);
}

DeGiorgiResult degiorgi_lemma_scaled(double c, double b, double delta, double scale, int jmax) {
    if (!(scale >= 0.0) || !std::isfinite(scale))
        throw std::invalid_argument("degiorgi_lemma: scale must be finite and >= 0");
    if (!(c > 1.0) || !(b > 1.0) || !(delta > 0.0))
        throw std::invalid_argument("degiorgi_lemma: need c > 1, b > 1, delta > 0");
    const __float128 d = delta;
    const __float128 lnu = -logq(c) / d - logq(b) / (d * d);
    const __float128 L0 = (scale > 0.0) ? lnu + logq(scale) : -HUGE_VALQ;
    return degiorgi_run(c, b, delta, L0, scale * static_cast<double>(expq(lnu)), jmax);
}

// --- elliptic ----------------------------------------------------------------

EllipticThresholds elliptic_thresholds(const IterationParams& p, const LambdaSpec& lam,
                                       double r) {
    p.validate();
    if (!(r > 0.0)) throw std::domain_error("elliptic_thresholds: r > 0");
    const double nu1 = std::pow(1.0 - p.a, p.n) / p.gamma;
    const double ex = (p.n - 1) * (p.c5 + 1.0) / (p.n * p.c5);
    const double beta = 2.0 * p.c4 * ex;
    const double jstar = 2.0 + std::log2(1.0 / p.xi) +
                         std::pow(p.gamma / nu1, ex) * std::exp(beta * eval_lambda(lam, r / 4.0));
    return {nu1, jstar, beta};
}

namespace {

/// Integral of exp(-coef * Lambda(beta,t)) dt/t over (lo, hi), computed in
/// u = ln t. Bounds may be far below double radius range (pass logs).
double lambda_decay_integral(const LambdaSpec& lam, double coef, double beta, double log_lo,
                             double log_hi, double rel_tol) {
    if (log_hi <= log_lo) return 0.0;
    auto f = [&](double u) { return std::exp(-coef * eval_Lambda_logr(lam, beta, -u)); };
    return adaptive_simpson(f, log_lo, log_hi, QuadratureOptions{rel_tol, 48});
}

}  // namespace

double elliptic_modulus(double rho, double r, const IterationParams& p, const LambdaSpec& lam) {
    p.validate();
    if (!(r > 0.0) || 2.0 * r > rho) throw std::invalid_argument("elliptic_modulus: need 0 < 2r <= rho");
    const double integral =
        lambda_decay_integral(lam, p.c, p.beta, std::log(2.0 * r), std::log(rho), 1e-8);
    const double tail = p.gamma * (1.0 + p.s0) * rho * std::exp(p.c * eval_Lambda(lam, p.beta, rho));
    return 2.0 * p.M * std::exp(-p.gamma * integral) + tail;
}

IterationTrace elliptic_oscillation_trace(double omega0, double rho, const IterationParams& p,
                                          const LambdaSpec& lam, int jmax) {
    p.validate();
    if (!(rho > 0.0)) throw std::invalid_argument("elliptic trace: rho > 0");
    if (!(omega0 >= 0.0) || omega0 > 2.0 * p.M * (1.0 + 1e-12))
        throw std::invalid_argument("elliptic trace: need 0 <= omega0 <= 2M");

    IterationTrace tr;
    tr.kind = TraceKind::EllipticOsc;
    tr.header = {{"gamma", p.gamma}, {"c", p.c},   {"beta", p.beta},
                 {"s0", p.s0},       {"M", p.M},   {"rho", rho},
                 {"omega0", omega0}, {"floor", p.elliptic_additive_floor ? 1.0 : 0.0}};

    double omega = omega0;
    const double log_inv_rho = std::log(1.0 / rho);
    tr.termination = Termination::MaxIter;
    for (long j = 0; j <= jmax; ++j) {
        const double ell = log_inv_rho + j * kLn2;
        const double Lam = eval_Lambda_logr(lam, p.beta, ell);
        const double contract = 1.0 - std::exp(-p.gamma * Lam);
        double add = 0.0;
        if (p.elliptic_additive_floor) {
            const double log_add = std::log(p.gamma * (1.0 + p.s0)) - ell + p.gamma * Lam;
            add = std::exp(log_add);
        }
        TraceRow row;
        row.j = j;
        row.radius = LogValue::from_log(-ell);
        row.has_radius = true;
        row.value = LogValue::from_value(omega);
        row.extra = LogValue::from_value(add);
        row.has_extra = p.elliptic_additive_floor;
        tr.rows.push_back(row);

        if (omega > 0.0 && add >= contract * omega) {
            tr.termination = Termination::FloorReached;
            break;
        }
        const double next = contract * omega + add;
        if (next <= 0.0 || next < 1e-300) {
            tr.termination = Termination::Converged;
            break;
        }
        omega = next;
    }
    return tr;
}

// --- parabolic degenerate -----------------------------------------------------

DegenerateThresholds parabolic_degenerate_thresholds(const IterationParams& p,
                                                     const LambdaSpec& lam, double rho) {
    p.validate();
    if (!(p.mu1 > 1.0))
        throw std::domain_error("degenerate thresholds: mu1 <= 1 makes beta1 singular (regime violation)");
    if (!(p.mu2 > p.mu1)) throw std::domain_error("degenerate thresholds: need mu2 > mu1");
    const double lr = eval_lambda(lam, rho);
    const double n = p.n;

    DegenerateThresholds th;
    th.nubar = p.nubar;
    th.beta0 = p.c0 * (n + 2.0) / p.mu1;
    th.beta1 = p.c0 * (2.0 * n + 3.0 + (1.0 + (3.0 + p.mu2) * (2.0 * n + 3.0)) / (p.mu1 - 1.0));
    th.beta2 = p.c0 * (5.0 * n + 8.0) * (p.c4 + 1.0) / p.c4;

    const double damp = std::exp(-2.0 * p.c0 * (2.0 * n + 3.0) * lr);
    th.sigma = p.nubar * p.nubar / 16.0 * damp / n;
    th.s = (std::log(p.gamma) - (1.0 + p.mu2) * std::log(th.sigma) + p.c0 * lr +
            std::log(16.0 / (p.nubar * p.nubar)) - std::log(damp)) /
           ((p.mu1 - 1.0) * kLn2);
    const double amp = 1.0 + 0.5 * p.nubar * p.nubar * std::exp(p.c0 * (2.0 * n + 3.0) * lr);
    th.s1 = th.s - std::log2(1.0 - 1.0 / std::sqrt(amp));
    th.s_star_lower = th.s1 + p.gamma * std::exp(th.beta2 * lr);
    th.s_star_upper = th.s_star_lower + std::log2(p.gamma) + th.beta0 * lr / kLn2;
    return th;
}

IterationTrace parabolic_degenerate_trace(double omega0, double rho, const IterationParams& p,
                                          const GrowthSpec& spec, const LambdaSpec& lam,
                                          int jmax) {
    p.validate();
    if (!(rho > 0.0)) throw std::invalid_argument("degenerate trace: rho > 0");
    if (!(omega0 >= 0.0)) throw std::invalid_argument("degenerate trace: omega0 >= 0");
    if (p.b0 > 0.0 && p.delta > 0.0 && p.R <= 0.0)
        throw std::invalid_argument("degenerate trace: R must be set when b0, delta > 0");

    const DegenerateThresholds th = parabolic_degenerate_thresholds(p, lam, rho);
    const double log_vmin = (p.b0 > 0.0 && p.delta > 0.0)
                                ? std::log(p.b0) - p.delta * std::log(p.R)
                                : -std::numeric_limits<double>::infinity();

    IterationTrace tr;
    tr.kind = TraceKind::ParabolicDegenerateOsc;
    tr.header = {{"gamma", p.gamma},   {"beta", p.beta},     {"c", p.c},
                 {"beta0", th.beta0},  {"beta1", th.beta1},  {"beta2", th.beta2},
                 {"delta0", p.delta0}, {"b0", p.b0},         {"rho", rho},
                 {"omega0", omega0}};

    const double x0 = spec.center.x, y0 = spec.center.y, t0 = spec.t0;
    const double log_inv_rho = std::log(1.0 / rho);
    double log_omega = omega0 > 0.0 ? std::log(omega0) : -std::numeric_limits<double>::infinity();
    tr.termination = Termination::MaxIter;
    long last_j = 0;
    for (long j = 0; j <= jmax; ++j) {
        const double ell = log_inv_rho + (j + 1) * std::log(8.0);  // r_j = rho/8^{j+1}
        const double Lam = eval_Lambda_logr(lam, p.beta, ell);
        const double log_floor = std::log(4.0 * (1.0 + p.b0)) - (1.0 - p.delta0) * ell +
                                 p.gamma * Lam;
        const double log_v = log_omega - std::log(4.0) + ell;

        TraceRow row;
        row.j = j;
        row.radius = LogValue::from_log(-ell);
        row.has_radius = true;
        row.value = LogValue::from_log(log_omega);
        row.extra = LogValue::from_log(log_floor);
        row.has_extra = true;
        if (std::isfinite(log_v)) {
            const double log_psi = log_g(spec, x0, y0, t0, log_v) - log_v;
            row.theta = LogValue::from_log(-2.0 * ell - log_psi);
            row.has_theta = true;
        }
        tr.rows.push_back(row);
        last_j = j;

        if (log_omega <= log_floor || log_v <= log_vmin) {
            tr.termination = Termination::FloorReached;
            break;
        }
        log_omega += std::log1p(-0.5 * std::exp(-p.gamma * Lam));
    }

    // Closing bound from the last reached scale.
    const double ell_last = log_inv_rho + (last_j + 1) * std::log(8.0);
    const double integral = lambda_decay_integral(lam, p.gamma, p.beta,
                                                  std::log(2.0) - ell_last, std::log(rho), 1e-8);
    const double tail = std::log(p.gamma * (1.0 + p.b0)) + (1.0 - p.delta0) * std::log(rho) +
                        p.gamma * eval_Lambda(lam, p.beta, rho);
    const double head = (omega0 > 0.0 ? std::log(omega0) : -std::numeric_limits<double>::infinity()) -
                        p.gamma * integral;
    tr.final_bound = LogValue::from_log(log_add_exp(head, tail));
    tr.has_final_bound = true;
    tr.header.emplace_back("final_bound_log", tr.final_bound.log);
    return tr;
}

// --- parabolic singular ---------------------------------------------------------

SingularThresholds parabolic_singular_thresholds(const IterationParams& p, const LambdaSpec& lam,
                                                 double log_inv_rho) {
    p.validate();
    if (!(p.mu3 > 0.0 && p.mu3 < 1.0))
        throw std::domain_error("singular thresholds: mu3 in (0,1) required");
    const double lr = eval_lambda_logr(lam, log_inv_rho);

    SingularThresholds th;
    th.beta = p.c0 * (p.n + 2.0);
    th.C = 4.0 * p.gamma / p.nu;
    const double Lam = std::exp(th.beta * lr);

    th.sigma0 = LogValue::from_log(-std::log(4.0) - th.C * Lam);
    th.epsilon = LogValue::from_log(
        (std::log(2.0) + th.sigma0.log - std::log(1.0 + 4.0 * p.c10 * p.c10)) / p.mu3);
    const double sigma = 1.0 / (16.0 * p.n);
    th.eta = std::exp((p.gamma * std::log(sigma) - std::log(16.0 * p.gamma)) / p.mu3);

    const double sigma0 = th.sigma0.representable() ? th.sigma0.value() : 0.0;
    const double target = std::log(p.nu) - p.c0 * (p.n + 1.0) * lr;
    th.jstar = sigma0 > 0.0 ? std::ceil(target / std::log1p(-sigma0))
                            : std::numeric_limits<double>::infinity();

    const double log_L1 = th.C * Lam;  // ln Lambda1
    th.tau1 = LogValue::from_log(log_L1 < 700.0
                                     ? -std::log(p.gamma0()) - 8.0 * std::exp(log_L1)
                                     : -std::numeric_limits<double>::infinity());
    return th;
}

IterationTrace parabolic_singular_trace(double omega0, double log_inv_rho,
                                        const IterationParams& p, const GrowthSpec& spec,
                                        const LambdaSpec& lam, int jmax) {
    p.validate();
    if (!(omega0 > 0.0)) throw std::invalid_argument("singular trace: omega0 > 0");
    const double kappa = p.delta / p.effective_deltabar();
    const double gamma0 = p.gamma0();
    const double step_coef = std::log(0.5 * (1.0 - 1.0 / (2.0 * gamma0)));
    const double floor_coef = std::log(2.0 * gamma0 * gamma0 * (1.0 + p.b0) / (2.0 * gamma0 - 1.0));

    const SingularThresholds th0 = parabolic_singular_thresholds(p, lam, log_inv_rho);

    IterationTrace tr;
    tr.kind = TraceKind::ParabolicSingularOsc;
    tr.header = {{"gamma", p.gamma},       {"nu", p.nu},
                 {"C", th0.C},             {"beta", th0.beta},
                 {"gamma0", gamma0},       {"delta0", p.delta0},
                 {"b0", p.b0},             {"log_rho", -log_inv_rho},
                 {"omega0", omega0},       {"tau1_log_at_rho", th0.tau1.log}};

    const double x0 = spec.center.x, y0c = spec.center.y, t0 = spec.t0;
    double lr = -log_inv_rho;  // ln rho_j
    double lr_prev = std::numeric_limits<double>::quiet_NaN();
    double log_omega = std::log(omega0);
    double tau_sum = 0.0;
    tr.termination = Termination::MaxIter;
    for (long j = 0; j <= jmax; ++j) {
        TraceRow row;
        row.j = j;
        row.radius = LogValue::from_log(lr);
        row.has_radius = true;
        row.value = LogValue::from_log(log_omega);
        const double log_v = log_omega - lr;
        const double log_psi = log_g(spec, x0, y0c, t0, log_v) - log_v;
        row.theta = LogValue::from_log(2.0 * lr - log_psi);
        row.has_theta = true;
        if (j > 0) {
            // theta at the threshold level (1+b0) rho_{j-1}^{-delta/deltabar}
            const double log_vt = std::log1p(p.b0) - kappa * lr_prev;
            const double log_psit = log_g(spec, x0, y0c, t0, log_vt) - log_vt;
            row.extra = LogValue::from_log(2.0 * lr - log_psit);
            row.has_extra = true;
        }
        tr.rows.push_back(row);
        if (j == jmax) break;

        const SingularThresholds th = parabolic_singular_thresholds(p, lam, -lr);
        const double tau1 = th.tau1.representable() ? th.tau1.value() : 0.0;
        tau_sum += tau1;

        lr_prev = lr;
        lr = step_coef + lr_prev + th.tau1.log;
        if (!std::isfinite(lr)) {
            tr.termination = Termination::Underflow;
            break;
        }
        const double log_contracted = log_omega + std::log1p(-0.5 * tau1);
        const double log_floor = floor_coef + (1.0 - kappa) * lr_prev - th.tau1.log;
        log_omega = std::max(log_contracted, log_floor);
    }

    // Closing bound.
    const double Lam_rho = eval_Lambda_logr(lam, th0.beta, log_inv_rho);
    const double log_L1 = th0.C * Lam_rho;
    const double tail = std::log(p.gamma * (1.0 + p.b0)) + (1.0 - p.delta0) * (-log_inv_rho) +
                        (log_L1 < 700.0 ? 8.0 * std::exp(log_L1)
                                        : std::numeric_limits<double>::infinity());
    const double head = std::log(omega0) - 0.5 * tau_sum;
    tr.final_bound = LogValue::from_log(log_add_exp(head, tail));
    tr.has_final_bound = true;
    tr.header.emplace_back("final_bound_log", tr.final_bound.log);
    return tr;
}

// --- interior lemma thresholds ---------------------------------------------------

double parabolic_nu2(const IterationParams& p, double lambda_r, double ratio) {
    if (!(ratio > 0.0)) throw std::domain_error("parabolic_nu2: ratio > 0");
    return std::exp(-p.c0 * (p.n + 1.0) * lambda_r) * ratio / p.gamma;
}

double parabolic_nu1(const IterationParams& p, double lambda_r, double ratio) {
    return parabolic_nu2(p, lambda_r, ratio) / std::pow(1.0 + ratio, p.n + 1.0);
}

// --- serialization -----------------------------------------------------------------

std::string trace_to_csv(const IterationTrace& trace) {
    std::string out;
    out += "# kind=";
    out += to_string(trace.kind);
    out += " termination=";
    out += to_string(trace.termination);
    out += "\n";
    for (const auto& [k, v] : trace.header) out += "# " + k + "=" + fmt17(v) + "\n";
    out += "j,radius,omega,theta,floor,log_flags\n";
    for (const TraceRow& r : trace.rows) {
        int flags = 0;
        auto cell = [&flags](const LogValue& lv, bool present, int bit) -> std::string {
            if (!present) return "";
            if (lv.representable()) return fmt17(lv.value());
            flags |= bit;
            return fmt17(lv.log);
        };
        const std::string radius = cell(r.radius, r.has_radius, 1);
        const std::string omega = cell(r.value, true, 2);
        const std::string theta = cell(r.theta, r.has_theta, 4);
        const std::string floor = cell(r.extra, r.has_extra, 8);
        out += std::to_string(r.j) + "," + radius + "," + omega + "," + theta + "," + floor +
               "," + std::to_string(flags) + "\n";
    }
    return out;
}

}  // namespace orlicz::iteration
