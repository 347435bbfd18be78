#include "growth.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

double field_or(const ScalarField& f, double fallback, double x, double y, double t) {
    return f ? f(x, y, t) : fallback;
}

double coefficient_at(const ScalarField& f, double fallback, double x, double y, double t,
                      const char* name) {
    const double v = field_or(f, fallback, x, y, t);
    if (v < 0.0)
        throw std::invalid_argument(std::string("coefficient field ") + name +
                                    " negative at the sampled point");
    return v;
}

/// Integral of s^{p-1} ln(1+s) over (0,z); no elementary antiderivative for
/// general p, integrated by adaptive Simpson. rel tol 1e-10, 60 levels.
double log_power_primitive(double p, double z) {
    if (z <= 0.0) return 0.0;
    auto f = [p](double s) { return (s <= 0.0) ? 0.0 : std::pow(s, p - 1.0) * std::log1p(s); };
    return adaptive_simpson(f, 0.0, z, QuadratureOptions{1e-10, 60});
}

}  // namespace

bool GrowthSpec::inside_domain(double x, double y, double t) const {
    const double dx = x - center.x, dy = y - center.y;
    if (dx * dx + dy * dy > domain_radius * domain_radius * (1.0 + 1e-12)) return false;
    if (std::isfinite(time_radius) && std::abs(t - t0) > time_radius) return false;
    return true;
}

void GrowthSpec::validate() const {
    if (family == GrowthFamily::G1 || family == GrowthFamily::G3) {
        if (!(1.0 < p && p <= q)) throw std::invalid_argument("growth: need 1 < p <= q");
    } else if (family == GrowthFamily::G2 || family == GrowthFamily::G4) {
        if (!(p > 1.0)) throw std::invalid_argument("growth: need p > 1");
    } else if (!custom_g) {
        throw std::invalid_argument("growth: custom family without a callable");
    }
    // Equality of the two exponents is admitted as the pure-power saturation
    // boundary of the regime conditions.
    if (mu3 != 0.0 || mu4 != 0.0) {
        if (!(0.0 < mu3 && mu3 <= mu4 && mu4 < 1.0))
            throw std::invalid_argument("growth: singular regime needs 0 < mu3 <= mu4 < 1");
    }
    if (mu1 != 0.0 || mu2 != 0.0) {
        if (!(0.0 < mu1 && mu1 <= mu2))
            throw std::invalid_argument("growth: degenerate regime needs 0 < mu1 <= mu2");
    }
    for (double ci : {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10})
        if (!(ci > 0.0)) throw std::invalid_argument("growth: structural constants must be > 0");
    if (s0 < 0 || b0 < 0 || delta < 0)
        throw std::invalid_argument("growth: thresholds s0, b0, delta must be >= 0");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("growth: alpha in (0,1]");
    if (n < 2) throw std::invalid_argument("growth: dimension n >= 2");
    if (!(M > 0.0)) throw std::invalid_argument("growth: bound M > 0");
    if (!(domain_radius > 0.0)) throw std::invalid_argument("growth: domain radius > 0");
}

double eval_g(const GrowthSpec& spec, double x, double y, double t, double v) {
    if (!(v > 0.0)) throw std::domain_error("eval_g: v must be > 0");
    if (!spec.inside_domain(x, y, t)) throw std::domain_error("eval_g: point outside domain");
    switch (spec.family) {
        case GrowthFamily::G1: {
            const double pe = field_or(spec.p_field, spec.p, x, y, t);
            const double qe = field_or(spec.q_field, spec.q, x, y, t);
            return std::pow(v, pe - 1.0) + std::pow(v, qe - 1.0);
        }
        case GrowthFamily::G2: {
            const double pe = field_or(spec.p_field, spec.p, x, y, t);
            return std::pow(v, pe - 1.0) * (1.0 + std::log1p(v));
        }
        case GrowthFamily::G3: {
            const double a = coefficient_at(spec.a_field, 0.0, x, y, t, "a");
            return std::pow(v, spec.p - 1.0) + a * std::pow(v, spec.q - 1.0);
        }
        case GrowthFamily::G4: {
            const double b = coefficient_at(spec.b_field, 0.0, x, y, t, "b");
            return std::pow(v, spec.p - 1.0) * (1.0 + b * std::log1p(v));
        }
        case GrowthFamily::Custom:
            return spec.custom_g(x, y, t, v);
    }
    throw std::logic_error("eval_g: unknown family");
}

double eval_G(const GrowthSpec& spec, double x, double y, double t, double z) {
    if (!(z > 0.0)) throw std::domain_error("eval_G: z must be > 0");
    if (!spec.inside_domain(x, y, t)) throw std::domain_error("eval_G: point outside domain");
    switch (spec.family) {
        case GrowthFamily::G1: {
            const double pe = field_or(spec.p_field, spec.p, x, y, t);
            const double qe = field_or(spec.q_field, spec.q, x, y, t);
            return std::pow(z, pe) / pe + std::pow(z, qe) / qe;
        }
        case GrowthFamily::G2: {
            const double pe = field_or(spec.p_field, spec.p, x, y, t);
            return std::pow(z, pe) / pe + log_power_primitive(pe, z);
        }
        case GrowthFamily::G3: {
            const double a = coefficient_at(spec.a_field, 0.0, x, y, t, "a");
            return std::pow(z, spec.p) / spec.p + a * std::pow(z, spec.q) / spec.q;
        }
        case GrowthFamily::G4: {
            const double b = coefficient_at(spec.b_field, 0.0, x, y, t, "b");
            return std::pow(z, spec.p) / spec.p + b * log_power_primitive(spec.p, z);
        }
        case GrowthFamily::Custom: {
            auto f = [&](double s) { return s <= 0.0 ? 0.0 : spec.custom_g(x, y, t, s); };
            return adaptive_simpson(f, 0.0, z, QuadratureOptions{1e-10, 60});
        }
    }
    throw std::logic_error("eval_G: unknown family");
}

double eval_psi(const GrowthSpec& spec, double x, double y, double t, double v) {
    return eval_g(spec, x, y, t, v) / v;
}

namespace {

/// ln(1 + ln(1+e^{lv})) for the log factors of g2/g4.
double log_one_plus_log1p_exp(double lv) {
    const double l1p = lv > 36.0 ? lv : std::log1p(std::exp(lv));
    return std::log1p(l1p);
}

}  // namespace

double log_g(const GrowthSpec& spec, double x, double y, double t, double log_v) {
    if (std::isnan(log_v)) throw std::domain_error("log_g: v must be > 0");
    if (!spec.inside_domain(x, y, t)) throw std::domain_error("log_g: point outside domain");
    switch (spec.family) {
        case GrowthFamily::G1: {
            const double pe = field_or(spec.p_field, spec.p, x, y, t);
            const double qe = field_or(spec.q_field, spec.q, x, y, t);
            return log_add_exp((pe - 1.0) * log_v, (qe - 1.0) * log_v);
        }
        case GrowthFamily::G2: {
            const double pe = field_or(spec.p_field, spec.p, x, y, t);
            return (pe - 1.0) * log_v + log_one_plus_log1p_exp(log_v);
        }
        case GrowthFamily::G3: {
            const double a = coefficient_at(spec.a_field, 0.0, x, y, t, "a");
            const double qa = a > 0.0 ? std::log(a) + (spec.q - 1.0) * log_v
                                      : -std::numeric_limits<double>::infinity();
            return log_add_exp((spec.p - 1.0) * log_v, qa);
        }
        case GrowthFamily::G4: {
            const double b = coefficient_at(spec.b_field, 0.0, x, y, t, "b");
            if (b == 0.0) return (spec.p - 1.0) * log_v;
            const double l1p = log_v > 36.0 ? log_v : std::log1p(std::exp(log_v));
            return (spec.p - 1.0) * log_v + std::log1p(b * l1p);
        }
        case GrowthFamily::Custom: {
            if (log_v > 700.0 || log_v < -700.0)
                throw NumericalError("log_g: custom family outside double range");
            return std::log(spec.custom_g(x, y, t, std::exp(log_v)));
        }
    }
    throw std::logic_error("log_g: unknown family");
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kEulerE = 2.718281828459045235360287;

void check_lambda_samples(const LambdaSpec& spec) {
    double prev = std::numeric_limits<double>::infinity();
    const double lo = std::log(spec.r_max) - 27.0;  // ~12 decades below r_max
    for (int i = 0; i < 64; ++i) {
        const double r = std::exp(lo + (std::log(spec.r_max) - 1e-9 - lo) * i / 63.0);
        const double v = eval_lambda(spec, r);
        if (v < 0.0) throw std::invalid_argument("lambda family negative on its domain");
        if (v > prev * (1.0 + 1e-9) + 1e-12)
            throw std::invalid_argument("lambda family not non-increasing");
        prev = v;
    }
}

}  // namespace

LambdaSpec LambdaSpec::constant(double L) {
    if (L < 0) throw std::invalid_argument("lambda: amplitude L >= 0");
    return LambdaSpec{LambdaFamily::Constant, L, std::numeric_limits<double>::infinity(),
                      nullptr};
}

LambdaSpec LambdaSpec::triple_log(double L) {
    if (L < 0) throw std::invalid_argument("lambda: amplitude L >= 0");
    return LambdaSpec{LambdaFamily::TripleLog, L, std::exp(-kEulerE), nullptr};
}

LambdaSpec LambdaSpec::quad_log_variant(double L) {
    if (L < 0) throw std::invalid_argument("lambda: amplitude L >= 0");
    return LambdaSpec{LambdaFamily::QuadLogVariant, L, std::exp(-kEulerE), nullptr};
}

LambdaSpec LambdaSpec::custom_fn(std::function<double(double)> f, double r_max) {
    if (!f) throw std::invalid_argument("lambda: empty custom callable");
    if (!(r_max > 0 && r_max <= 1.0)) throw std::invalid_argument("lambda: r_max in (0,1]");
    LambdaSpec spec{LambdaFamily::Custom, 0.0, r_max, std::move(f)};
    check_lambda_samples(spec);
    return spec;
}

double eval_lambda(const LambdaSpec& spec, double r) {
    if (!(r > 0.0 && r < spec.r_max)) throw std::domain_error("lambda: r outside (0, r_max)");
    return eval_lambda_logr(spec, std::log(1.0 / r));
}

double eval_lambda_logr(const LambdaSpec& spec, double ell) {
    if (std::isnan(ell) || !(ell > -std::log(spec.r_max)))
        throw std::domain_error("lambda: radius outside (0, r_max)");
    switch (spec.family) {
        case LambdaFamily::Constant:
            return spec.L;
        case LambdaFamily::TripleLog:
            // l > e on the domain, so the double log is nonnegative.
            return spec.L * std::log(std::log(ell));
        case LambdaFamily::QuadLogVariant: {
            const double a2 = std::log(ell);
            if (a2 <= 0.0) return 0.0;
            const double a3 = std::log(a2);
            if (a3 <= 0.0) return 0.0;
            const double a4 = std::log(a3);
            if (a4 <= 8.0) return 0.0;  // ln(a4/8) <= 0: floored at zero
            const double w = std::log(a4 / 8.0);
            if (w <= 1.0) return 0.0;
            return spec.L * std::log(w);
        }
        case LambdaFamily::Custom: {
            if (ell > 708.0)
                throw NumericalError("custom lambda undefined below double radius range");
            return spec.custom(std::exp(-ell));
        }
    }
    throw std::logic_error("lambda: unknown family");
}

double eval_Lambda(const LambdaSpec& spec, double beta, double r) {
    if (!(beta > 0.0)) throw std::domain_error("Lambda: beta > 0");
    return std::exp(beta * eval_lambda(spec, r));
}

double eval_Lambda_logr(const LambdaSpec& spec, double beta, double ell) {
    if (!(beta > 0.0)) throw std::domain_error("Lambda: beta > 0");
    return std::exp(beta * eval_lambda_logr(spec, ell));
}

double log_Lambda1(const LambdaSpec& spec, double c, double beta, double r) {
    if (!(c > 0.0)) throw std::domain_error("Lambda1: c > 0");
    return c * eval_Lambda(spec, beta, r);
}

double log_Lambda1_logr(const LambdaSpec& spec, double c, double beta, double ell) {
    if (!(c > 0.0)) throw std::domain_error("Lambda1: c > 0");
    return c * eval_Lambda_logr(spec, beta, ell);
}

double eval_Lambda1(const LambdaSpec& spec, double c, double beta, double r) {
    return std::exp(log_Lambda1(spec, c, beta, r));
}

}  // namespace orlicz
