#include "conditions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orlicz::conditions {

namespace {

constexpr double kTol = 1e-12;  // normalized-ratio slack for exact saturation

const char* kPartKey = "violated_part";  // 1 = lower/first inequality, 2 = upper/second

Point sample_in_disc(Rng& rng, Point c, double radius) {
    const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double rad = radius * std::sqrt(rng.uniform01());
    return {c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)};
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(hi);
        return out;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) out.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
    return out;
}

struct WorstTracker {
    double worst = -std::numeric_limits<double>::infinity();
    Witness at;
    long samples = 0;
    int part = 0;

    void feed(double ratio, const Witness& w, int which_part) {
        ++samples;
        if (ratio > worst) {
            worst = ratio;
            at = w;
            part = which_part;
        }
    }
};

ConditionReport finish(std::string id, const WorstTracker& t,
                       std::vector<std::pair<std::string, double>> constants,
                       std::string detail = {}) {
    ConditionReport rep;
    rep.id = std::move(id);
    rep.worst_ratio = t.worst;
    rep.samples = t.samples;
    rep.constants = std::move(constants);
    rep.detail = std::move(detail);
    if (t.samples == 0) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    rep.verdict = t.worst > 1.0 + kTol ? Verdict::Violated : Verdict::Holds;
    if (rep.verdict == Verdict::Violated) {
        rep.witness = t.at;
        if (t.part != 0) rep.constants.emplace_back(kPartKey, t.part);
    }
    return rep;
}

double g1_ratio(const GrowthSpec& s, double x, double y, double t, double v, double w) {
    return (eval_g(s, x, y, t, w) / eval_g(s, x, y, t, v)) /
           (s.c1 * std::pow(w / v, s.q - 1.0));
}

double g3_ratio(const GrowthSpec& s, double x, double y, double t, double v, double w) {
    return s.c7 * std::pow(w / v, s.p - 1.0) /
           (eval_g(s, x, y, t, w) / eval_g(s, x, y, t, v));
}

double g2_ratio(const GrowthSpec& s, const LambdaSpec& lam, double r, double x1, double y1,
                double x2, double y2, double v) {
    return eval_g(s, x1, y1, s.t0, v / r) /
           (s.c2 * std::exp(eval_lambda(lam, r)) * eval_g(s, x2, y2, s.t0, v / r));
}

double psi_part_ratio(const GrowthSpec& s, PsiRegime regime, int part, double x, double y,
                      double t, double v, double w) {
    const double pv = eval_psi(s, x, y, t, v), pw = eval_psi(s, x, y, t, w);
    if (regime == PsiRegime::Degenerate) {
        if (part == 1) return s.c7 * std::pow(w / v, s.mu1) * pv / pw;
        return (pw / pv) / (s.c8 * std::pow(w / v, s.mu2));
    }
    if (part == 1) return s.c9 * std::pow(v / w, s.mu4) * pv / pw;
    return (pw / pv) / (s.c10 * std::pow(v / w, s.mu3));
}

double young_ratio(const GrowthSpec& s, int part, double x, double y, double eps, double a,
                   double b) {
    const double ga = eval_g(s, x, y, s.t0, a);
    const double lhs = ga * b;
    if (part == 1) return lhs / (eps * ga * a + eval_g(s, x, y, s.t0, b / eps) * b);
    return lhs / (ga * a / eps +
                  std::pow(eps, s.p - 1.0) / s.c7 * eval_g(s, x, y, s.t0, b) * b);
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Degenerate: return "degenerate";
        case Regime::Singular: return "singular";
        case Regime::BothExcluded: return "both-excluded";
    }
    return "?";
}

ConditionReport check_g1_elliptic(const GrowthSpec& spec, const SamplePlan& plan) {
    spec.validate();
    if (plan.v_points <= 0 || plan.ratio_points <= 0 || plan.x_points <= 0)
        throw std::invalid_argument("check_g1: empty sample plan");
    Rng rng(plan.seed);
    const double v_lo = std::max(spec.s0, 1e-6) * (1.0 + 1e-9);
    const auto vs = log_spaced(v_lo, plan.v_cap, plan.v_points);
    const auto ratios = log_spaced(std::pow(plan.ratio_cap, 1.0 / plan.ratio_points),
                                   plan.ratio_cap, plan.ratio_points);
    std::vector<Point> pts;
    for (int i = 0; i < plan.x_points; ++i)
        pts.push_back(sample_in_disc(rng, spec.center, spec.domain_radius * 0.999));

    WorstTracker t;
    for (const Point& pt : pts)
        for (double v : vs)
            for (double ratio : ratios) {
                const double w = v * ratio;
                if (w > plan.v_cap * (1.0 + 1e-9)) continue;
                const double rr = g1_ratio(spec, pt.x, pt.y, spec.t0, v, w);
                t.feed(rr, Witness{pt.x, pt.y, spec.t0, pt.x, pt.y, spec.t0, v, w, 0}, 0);
            }
    return finish("g1-upper", t, {{"c1", spec.c1}, {"q", spec.q}, {"s0", spec.s0}});
}

ConditionReport check_g3_lower(const GrowthSpec& spec, const SamplePlan& plan) {
    spec.validate();
    if (plan.v_points <= 0 || plan.ratio_points <= 0 || plan.x_points <= 0)
        throw std::invalid_argument("check_g3: empty sample plan");
    Rng rng(plan.seed);
    const auto vs = log_spaced(1e-6, plan.v_cap, plan.v_points);
    const auto ratios = log_spaced(std::pow(plan.ratio_cap, 1.0 / plan.ratio_points),
                                   plan.ratio_cap, plan.ratio_points);
    std::vector<Point> pts;
    for (int i = 0; i < plan.x_points; ++i)
        pts.push_back(sample_in_disc(rng, spec.center, spec.domain_radius * 0.999));

    WorstTracker t;
    for (const Point& pt : pts)
        for (double v : vs)
            for (double ratio : ratios) {
                const double w = v * ratio;
                if (w > plan.v_cap * (1.0 + 1e-9)) continue;
                const double rr = g3_ratio(spec, pt.x, pt.y, spec.t0, v, w);
                t.feed(rr, Witness{pt.x, pt.y, spec.t0, pt.x, pt.y, spec.t0, v, w, 0}, 0);
            }
    return finish("g3-lower", t, {{"c7", spec.c7}, {"p", spec.p}});
}

ConditionReport check_g2_continuity(const GrowthSpec& spec, const LambdaSpec& lam, double K,
                                    const std::vector<double>& radii, const SamplePlan& plan) {
    spec.validate();
    if (radii.empty()) throw std::invalid_argument("check_g2: no radii supplied");
    for (double r : radii) {
        if (!(r > 0.0) || 8.0 * r > spec.domain_radius * (1.0 + 1e-12))
            throw std::invalid_argument("check_g2: B_{8r} must fit inside the domain ball");
        if (!(r < lam.r_max)) throw std::invalid_argument("check_g2: radius beyond lambda domain");
        if (!(r <= K)) throw std::invalid_argument("check_g2: need r <= v <= K, so K >= r");
    }
    if (!(K > 0.0)) throw std::invalid_argument("check_g2: K > 0");

    Rng rng(plan.seed);
    WorstTracker t;
    double min_c2 = 0.0;
    for (double r : radii) {
        const double el = std::exp(eval_lambda(lam, r));
        std::vector<std::pair<Point, Point>> pairs;
        for (int i = 0; i < plan.x_points; ++i)
            pairs.emplace_back(sample_in_disc(rng, spec.center, r),
                               sample_in_disc(rng, spec.center, r));
        const auto vs = log_spaced(r, std::max(K, r * (1.0 + 1e-9)), plan.v_points);
        for (const auto& [a, b] : pairs)
            for (double v : vs) {
                const double num = eval_g(spec, a.x, a.y, spec.t0, v / r);
                const double den = eval_g(spec, b.x, b.y, spec.t0, v / r);
                min_c2 = std::max(min_c2, num / (el * den));
                t.feed(num / (spec.c2 * el * den),
                       Witness{a.x, a.y, spec.t0, b.x, b.y, spec.t0, v, 0, r}, 0);
            }
    }
    return finish("g2-continuity", t,
                  {{"c2", spec.c2}, {"K", K}, {"min_c2", min_c2}});
}

ConditionReport check_psi_regime(const GrowthSpec& spec, PsiRegime regime, double R,
                                 const SamplePlan& plan) {
    spec.validate();
    if (regime == PsiRegime::Degenerate && !(spec.mu1 > 0.0 && spec.mu2 >= spec.mu1))
        throw std::invalid_argument("check_psi: degenerate constants mu1, mu2 missing");
    if (regime == PsiRegime::Singular && !(spec.mu3 > 0.0 && spec.mu4 >= spec.mu3))
        throw std::invalid_argument("check_psi: singular constants mu3, mu4 missing");
    if (spec.delta > 0.0 && !(R > 0.0))
        throw std::invalid_argument("check_psi: R must be set when delta > 0");

    const double v_floor =
        spec.b0 > 0.0 ? spec.b0 * std::pow(R > 0.0 ? R : 1.0, -spec.delta) : 0.0;
    const double v_lo = std::max(v_floor * (1.0 + 1e-9), 1e-6);
    if (v_lo >= plan.v_cap) {
        ConditionReport rep;
        rep.id = regime == PsiRegime::Degenerate ? "psi-degenerate" : "psi-singular";
        rep.verdict = Verdict::Inconclusive;
        rep.detail = "threshold b0 R^{-delta} above the sampling cap";
        return rep;
    }

    Rng rng(plan.seed);
    const auto vs = log_spaced(v_lo, plan.v_cap, plan.v_points);
    const auto ratios = log_spaced(std::pow(plan.ratio_cap, 1.0 / plan.ratio_points),
                                   plan.ratio_cap, plan.ratio_points);
    const double t_span = R > 0.0 ? R : spec.domain_radius;
    std::vector<std::pair<Point, double>> cyl;
    for (int i = 0; i < plan.x_points; ++i)
        cyl.emplace_back(sample_in_disc(rng, spec.center, spec.domain_radius * 0.999),
                         spec.t0 - t_span * rng.uniform01());

    WorstTracker t;
    for (double v : vs)
        for (double ratio : ratios) {
            const double w = v * ratio;
            if (w > plan.v_cap * (1.0 + 1e-9)) continue;
            const double lower = psi_part_ratio(spec, regime, 1, spec.center.x, spec.center.y,
                                                spec.t0, v, w);
            t.feed(lower,
                   Witness{spec.center.x, spec.center.y, spec.t0, spec.center.x, spec.center.y,
                           spec.t0, v, w, 0},
                   1);
            for (const auto& [pt, tt] : cyl) {
                const double upper = psi_part_ratio(spec, regime, 2, pt.x, pt.y, tt, v, w);
                t.feed(upper, Witness{pt.x, pt.y, tt, pt.x, pt.y, tt, v, w, 0}, 2);
            }
        }
    std::vector<std::pair<std::string, double>> consts = {{"b0", spec.b0},
                                                          {"delta", spec.delta},
                                                          {"R", R}};
    if (regime == PsiRegime::Degenerate) {
        consts.emplace_back("mu1", spec.mu1);
        consts.emplace_back("mu2", spec.mu2);
        consts.emplace_back("c7", spec.c7);
        consts.emplace_back("c8", spec.c8);
        return finish("psi-degenerate", t, std::move(consts));
    }
    consts.emplace_back("mu3", spec.mu3);
    consts.emplace_back("mu4", spec.mu4);
    consts.emplace_back("c9", spec.c9);
    consts.emplace_back("c10", spec.c10);
    return finish("psi-singular", t, std::move(consts));
}

ConditionReport check_young(const GrowthSpec& spec, const SamplePlan& plan, long n_samples) {
    spec.validate();
    if (n_samples <= 0) throw std::invalid_argument("check_young: n_samples > 0");
    Rng rng(plan.seed);
    WorstTracker t;
    for (long i = 0; i < n_samples; ++i) {
        const Point pt = sample_in_disc(rng, spec.center, spec.domain_radius * 0.999);
        const double eps = rng.uniform(1e-6, 1.0 - 1e-9);
        const double a = rng.log_uniform(1e-4, 100.0);
        const double b = rng.log_uniform(1e-4, 100.0);
        const double r1 = young_ratio(spec, 1, pt.x, pt.y, eps, a, b);
        const double r2 = young_ratio(spec, 2, pt.x, pt.y, eps, a, b);
        t.feed(r1, Witness{pt.x, pt.y, spec.t0, pt.x, pt.y, spec.t0, a, b, eps}, 1);
        t.feed(r2, Witness{pt.x, pt.y, spec.t0, pt.x, pt.y, spec.t0, a, b, eps}, 2);
    }
    return finish("young", t, {{"p", spec.p}, {"c7", spec.c7}});
}

double recheck_witness(const ConditionReport& report, const GrowthSpec& spec,
                       const LambdaSpec* lam) {
    if (!report.witness) throw std::invalid_argument("recheck_witness: report has no witness");
    const Witness& w = *report.witness;
    int part = 0;
    for (const auto& [k, v] : report.constants)
        if (k == kPartKey) part = static_cast<int>(v);
    if (report.id == "g1-upper") return g1_ratio(spec, w.x1, w.y1, w.t1, w.v, w.w);
    if (report.id == "g3-lower") return g3_ratio(spec, w.x1, w.y1, w.t1, w.v, w.w);
    if (report.id == "g2-continuity") {
        if (!lam) throw std::invalid_argument("recheck_witness: g2 needs lambda");
        return g2_ratio(spec, *lam, w.r, w.x1, w.y1, w.x2, w.y2, w.v);
    }
    if (report.id == "psi-degenerate")
        return psi_part_ratio(spec, PsiRegime::Degenerate, part, w.x1, w.y1, w.t1, w.v, w.w);
    if (report.id == "psi-singular")
        return psi_part_ratio(spec, PsiRegime::Singular, part, w.x1, w.y1, w.t1, w.v, w.w);
    if (report.id == "young") return young_ratio(spec, part, w.x1, w.y1, w.r, w.v, w.w);
    throw std::invalid_argument("recheck_witness: unknown condition id " + report.id);
}

// --- regime classification -----------------------------------------------------

namespace {

/// Root of coef * R^alpha * exp(lambda(R)) = target on (0, hi]; the product
/// vanishes at 0 by the coefficient-modulus hypothesis, so a downward scan
/// brackets the first crossing from above.
std::optional<std::pair<double, double>> solve_radius(const LambdaSpec& lam, double coef,
                                                      double alpha, double target) {
    const double hi = std::isfinite(lam.r_max) ? lam.r_max * (1.0 - 1e-9) : 0.999999;
    auto f = [&](double R) { return coef * std::pow(R, alpha) * std::exp(eval_lambda(lam, R)); };
    double above = -1.0, below = -1.0;
    const int kScan = 600;
    double prev = hi;
    if (f(hi) < target) return std::nullopt;
    for (int i = 1; i <= kScan; ++i) {
        const double R = hi * std::exp(-0.05 * i);
        if (f(R) < target) {
            above = prev;
            below = R;
            break;
        }
        prev = R;
    }
    if (below < 0.0) return std::nullopt;
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(above * below);
        if (f(mid) >= target)
            above = mid;
        else
            below = mid;
        if (std::abs(f(above) - target) < 1e-13) break;
    }
    return std::make_pair(above, std::abs(f(above) - target));
}

RegimeClassification degenerate(double mu1, double mu2, double delta, double b0) {
    RegimeClassification c;
    c.regime = Regime::Degenerate;
    c.verdict = Verdict::Holds;
    c.mu1 = mu1;
    c.mu2 = mu2;
    c.delta = delta;
    c.b0 = b0;
    return c;
}

RegimeClassification singular(double mu3, double mu4, double delta, double b0) {
    RegimeClassification c;
    c.regime = Regime::Singular;
    c.verdict = Verdict::Holds;
    c.mu3 = mu3;
    c.mu4 = mu4;
    c.delta = delta;
    c.b0 = b0;
    return c;
}

RegimeClassification inconclusive(std::string note) {
    RegimeClassification c;
    c.verdict = Verdict::Inconclusive;
    c.note = std::move(note);
    return c;
}

RegimeClassification both_excluded(std::string note) {
    RegimeClassification c;
    c.regime = Regime::BothExcluded;
    c.verdict = Verdict::Holds;
    c.note = std::move(note);
    return c;
}

}  // namespace

RegimeClassification classify_example(const GrowthSpec& spec, const LambdaSpec& lam) {
    spec.validate();
    const double p = spec.p, q = spec.q;
    switch (spec.family) {
        case GrowthFamily::G1: {
            if (p > 2.0) return degenerate(p - 2.0, q - 2.0, 0.0, 0.0);
            if (q < 2.0) return singular(2.0 - q, 2.0 - p, 0.0, 0.0);
            const double p1 = spec.p1, q1 = spec.q1;
            if (p1 > 0.0 && q1 > 0.0 && p <= p1 && p1 < 2.0 && 2.0 < q1 && q1 <= q) {
                const double mu1 = (q1 - 2.0) / 2.0;
                const double b0 = std::max(
                    1.0, std::pow((2.0 - p + mu1) / (q1 - 2.0 + mu1), 1.0 / (q1 - p1)));
                return degenerate(mu1, q - 2.0, 0.0, b0);
            }
            if (p == 2.0 && q == 2.0) return both_excluded("psi constant: no mu exponent fits");
            return inconclusive("exponent range straddles 2 without interior bounds p1 < 2 < q1");
        }
        case GrowthFamily::G2: {
            const double p_hi = spec.p1 > 0.0 ? spec.p1 : p;
            if (p > 2.0) return degenerate(p - 2.0, p - 1.0, 0.0, 0.0);
            if (p_hi < 2.0)
                return singular((2.0 - p) / 2.0, 2.0 - p, 0.0, std::exp(2.0 / (2.0 - p)) - 1.0);
            if (p == 2.0 && p_hi == 2.0) return both_excluded("exponent pinned at 2");
            return inconclusive("exponent range straddles 2");
        }
        case GrowthFamily::G3: {
            if (!(p < q && q <= p + spec.alpha))
                return inconclusive("double phase requires p < q <= p + alpha");
            const double a_ctr = spec.a_field ? spec.a_field(spec.center.x, spec.center.y, spec.t0)
                                              : 0.0;
            if (p > 2.0 && a_ctr > 0.0) {
                const double delta = spec.alpha / (q - p);
                double b0 = 0.0;
                if (q + 2.0 - 2.0 * p > 0.0)
                    b0 = std::pow(2.0 / spec.a0 * (q + 2.0 - 2.0 * p) / (q - 2.0),
                                  1.0 / (q - p));
                auto c = degenerate((q - 2.0) / 2.0, q - 2.0, delta, b0);
                auto root = solve_radius(lam, spec.a0, spec.alpha, 0.5 * a_ctr);
                if (!root) {
                    c.note = "admissible R: coefficient modulus never reaches a(center)/2";
                    c.verdict = Verdict::Inconclusive;
                } else {
                    c.admissible_R = root->first;
                    c.r_residual = root->second;
                }
                return c;
            }
            if (p > 2.0) return degenerate(p - 2.0, q - 2.0, 0.0, 0.0);
            if (q < 2.0) return singular(2.0 - q, 2.0 - p, 0.0, 0.0);
            if (p < 2.0 && 2.0 < q && a_ctr == 0.0) {
                auto c = singular((2.0 - p) / 2.0, 2.0 - p, 0.0, 0.0);
                const double coef = spec.a0 * (q - 1.0 - p / 2.0) * std::pow(spec.M, q - p);
                auto root = solve_radius(lam, coef, spec.alpha, (2.0 - p) / 2.0);
                if (!root) {
                    // Inequality satisfied on the whole scanned range.
                    c.admissible_R =
                        std::isfinite(lam.r_max) ? lam.r_max * (1.0 - 1e-9) : 0.999999;
                    c.r_residual = std::abs(coef * std::pow(*c.admissible_R, spec.alpha) *
                                                std::exp(eval_lambda(lam, *c.admissible_R)) -
                                            (2.0 - p) / 2.0);
                    c.note = "inequality holds up to the lambda domain edge";
                } else {
                    c.admissible_R = root->first;
                    c.r_residual = root->second;
                }
                return c;
            }
            if (p < 2.0 && 2.0 < q)
                return inconclusive("mixed exponents with a(center) > 0: no stated parameters");
            return both_excluded("an exponent sits exactly at 2");
        }
        case GrowthFamily::G4: {
            if (p > 2.0) return degenerate(p - 2.0, p - 1.0, 0.0, 0.0);
            if (p < 2.0)
                return singular((2.0 - p) / 2.0, 2.0 - p, 0.0, std::exp(2.0 / (2.0 - p)) - 1.0);
            return both_excluded("exponent pinned at 2");
        }
        case GrowthFamily::Custom:
            return inconclusive("custom family: regime not decidable from declared data");
    }
    return inconclusive("unknown family");
}

// --- lambda admissibility -------------------------------------------------------

namespace {

struct TailStats {
    Verdict verdict = Verdict::Inconclusive;
    double slope = 0;
};

/// Vanishing limit: phi(r) = weight ln r + X(r) must fall along the tail of
/// the dyadic grid with a clearly positive slope against ln r.
TailStats vanishing_check(const std::vector<double>& ells, const std::vector<double>& phi) {
    TailStats st;
    const std::size_t n = ells.size();
    if (n < 4) return st;
    const std::size_t tail = std::min<std::size_t>(20, n / 2 + 2);
    std::vector<double> lx, ly;
    bool monotone = true;
    for (std::size_t i = n - tail; i < n; ++i) {
        lx.push_back(-ells[i]);  // ln r
        ly.push_back(phi[i]);
        if (i > n - tail && !(phi[i] < phi[i - 1])) monotone = false;
    }
    st.slope = fit_slope(lx, ly);
    if (!std::isfinite(st.slope)) {
        st.verdict = Verdict::Violated;
        return st;
    }
    st.verdict = (monotone && st.slope >= 0.05) ? Verdict::Holds : Verdict::Violated;
    return st;
}

/// Divergence proxy: dyadic increments of the integral/series must not decay
/// geometrically (fitted ln-increment slope >= -0.05 per dyad).
TailStats divergence_check(const std::vector<double>& increments) {
    TailStats st;
    std::vector<double> ix, iy;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        if (increments[i] > 0.0) {
            ix.push_back(static_cast<double>(i));
            iy.push_back(std::log(increments[i]));
        }
    }
    if (ix.size() < 3) {
        st.verdict = Verdict::Inconclusive;
        return st;
    }
    // zeros in the tail mean the integrand died before the truncation
    if (ix.back() != static_cast<double>(increments.size() - 1)) {
        st.verdict = Verdict::Violated;
        st.slope = -std::numeric_limits<double>::infinity();
        return st;
    }
    const std::size_t half = ix.size() / 2;
    std::vector<double> tx(ix.begin() + half, ix.end()), ty(iy.begin() + half, iy.end());
    st.slope = fit_slope(tx, ty);
    st.verdict = st.slope >= -0.05 ? Verdict::Holds : Verdict::Violated;
    return st;
}

AdmissibilityReport lambda_dyadic_check(std::string id, const LambdaSpec& lam, double c,
                                        double beta, double weight, double rho0, double r_min) {
    if (!(r_min > 0.0) || !(rho0 > 0.0) || r_min > rho0 / 2.0 * 1e-2)
        throw std::invalid_argument("lambda check: need 0 < r_min << rho0/2");
    if (!(rho0 < lam.r_max))
        throw std::invalid_argument("lambda check: lambda domain does not reach rho0");
    if (!(c > 0.0 && beta > 0.0)) throw std::invalid_argument("lambda check: c, beta > 0");

    AdmissibilityReport rep;
    rep.id = std::move(id);

    std::vector<double> ells;  // ln(1/r_k), r_k = rho0 2^{-(k+1)}
    for (double ell = std::log(2.0 / rho0); ell <= std::log(1.0 / r_min) + 1e-12;
         ell += std::numbers::ln2)
        ells.push_back(ell);
    rep.truncation_radius = std::exp(-ells.back());

    // doubling
    bool doubling_ok = true;
    std::vector<double> phi;
    for (double ell : ells) {
        const double a = c * eval_Lambda_logr(lam, beta, ell);
        const double b = c * eval_Lambda_logr(lam, beta, ell - std::numbers::ln2);
        if (a > weight * std::log(1.5) + b + 1e-12 * std::max(1.0, std::abs(b)))
            doubling_ok = false;
        phi.push_back(-weight * ell + a);
    }
    rep.doubling = doubling_ok ? Verdict::Holds : Verdict::Violated;

    // divergence of the integral of exp(-c Lambda) dr/r
    std::vector<double> increments;
    double partial = 0.0;
    for (std::size_t k = 0; k + 1 < ells.size(); ++k) {
        auto f = [&](double u) { return std::exp(-c * eval_Lambda_logr(lam, beta, u)); };
        const double dj = adaptive_simpson(f, ells[k], ells[k + 1], QuadratureOptions{1e-8, 30});
        increments.push_back(dj);
        partial += dj;
    }
    rep.partial_value = partial;
    const TailStats div = divergence_check(increments);
    rep.divergence = div.verdict;
    rep.divergence_slope = div.slope;

    // vanishing limit
    const TailStats van = vanishing_check(ells, phi);
    rep.vanishing = van.verdict;
    rep.vanishing_slope = van.slope;

    rep.overall = (rep.doubling == Verdict::Holds && rep.divergence == Verdict::Holds &&
                   rep.vanishing == Verdict::Holds)
                      ? Verdict::Holds
                      : (rep.doubling == Verdict::Violated || rep.divergence == Verdict::Violated ||
                                 rep.vanishing == Verdict::Violated
                             ? Verdict::Violated
                             : Verdict::Inconclusive);
    return rep;
}

}  // namespace

AdmissibilityReport check_lambda_elliptic(const LambdaSpec& lam, double c, double beta,
                                          double rho0, double r_min) {
    return lambda_dyadic_check("lambda-elliptic", lam, c, beta, 1.0, rho0, r_min);
}

AdmissibilityReport check_lambda_parabolic_degenerate(const LambdaSpec& lam, double c, double beta,
                                                      double delta0, double R, double r_min) {
    if (!(delta0 > 0.0 && delta0 < 1.0))
        throw std::invalid_argument("lambda degenerate check: delta0 in (0,1)");
    return lambda_dyadic_check("lambda-degenerate", lam, c, beta, 1.0 - delta0, R, r_min);
}

AdmissibilityReport check_lambda_parabolic_singular(const LambdaSpec& lam, double c, double beta,
                                                    double cbar, double delta0, double rho,
                                                    long max_terms) {
    if (!(delta0 > 0.0 && delta0 < 1.0))
        throw std::invalid_argument("lambda singular check: delta0 in (0,1)");
    if (!(cbar > 0.0)) throw std::invalid_argument("lambda singular check: cbar > 0");
    if (!(rho > 0.0 && rho < lam.r_max))
        throw std::invalid_argument("lambda singular check: rho beyond lambda domain");
    if (max_terms < 2) throw std::invalid_argument("lambda singular check: max_terms >= 2");

    AdmissibilityReport rep;
    rep.id = "lambda-singular";
    const double weight = 1.0 - delta0;

    // doubling and vanishing for exp(8 Lambda1) on a dyadic grid
    std::vector<double> ells, phi;
    bool doubling_ok = true;
    for (int k = 0; k < 48; ++k) {
        const double ell = std::log(2.0 / rho) + k * std::numbers::ln2;
        ells.push_back(ell);
        const double a = c * eval_Lambda_logr(lam, beta, ell);
        const double b = c * eval_Lambda_logr(lam, beta, ell - std::numbers::ln2);
        if (std::max(a, b) > 690.0) {
            if (a > b + 1e-12 * std::max(1.0, std::abs(b))) doubling_ok = false;
        } else if (8.0 * (std::exp(a) - std::exp(b)) >
                   weight * std::log(1.5) + 1e-12 * std::max(1.0, 8.0 * std::exp(b))) {
            doubling_ok = false;
        }
        phi.push_back(-weight * ell + (a > 690.0 ? std::numeric_limits<double>::infinity()
                                                 : 8.0 * std::exp(a)));
    }
    rep.doubling = doubling_ok ? Verdict::Holds : Verdict::Violated;
    const TailStats van = vanishing_check(ells, phi);
    rep.vanishing = van.verdict;
    rep.vanishing_slope = van.slope;

    // the radius sequence and its series
    std::vector<double> terms;
    double ell = std::log(1.0 / rho);
    double partial = 0.0;
    bool radii_overflow = false;
    bool remark_ok = true;
    double ell1 = std::numeric_limits<double>::quiet_NaN();
    for (long i = 0; i < max_terms; ++i) {
        const double lL1 = c * eval_Lambda_logr(lam, beta, ell);  // ln Lambda1
        const double X = lL1 > 690.0 ? std::numeric_limits<double>::infinity()
                                     : 8.0 * std::exp(lL1);
        const double term = std::isfinite(X) ? std::exp(-X) : 0.0;
        terms.push_back(term);
        partial += term;
        if (partial < (i + 1) * term * (1.0 - 1e-12)) remark_ok = false;
        ell = ell - std::log(cbar) + X;
        if (i == 0) ell1 = ell;
        if (!std::isfinite(ell)) {
            radii_overflow = true;
            break;
        }
    }
    rep.terms = static_cast<long>(terms.size());
    rep.partial_value = partial;
    rep.truncation_radius = -ell;  // ln r of the last generated radius
    rep.remark_bound = remark_ok ? Verdict::Holds : Verdict::Violated;

    const TailStats div = divergence_check(terms);
    rep.divergence = div.verdict;
    rep.divergence_slope = div.slope;
    if (radii_overflow && partial == 0.0) rep.divergence = Verdict::Inconclusive;

    const double gamma0 = 2.0 - delta0;
    const bool r1_ok = std::isfinite(ell1) && ell1 <= gamma0 * std::log(1.0 / rho) + 1e-12;
    rep.detail = std::string("r1 >= rho^gamma0: ") + (r1_ok ? "holds" : "fails at this rho");

    rep.overall = (rep.doubling == Verdict::Holds && rep.divergence == Verdict::Holds &&
                   rep.vanishing == Verdict::Holds && rep.remark_bound == Verdict::Holds)
                      ? Verdict::Holds
                      : (rep.divergence == Verdict::Inconclusive ? Verdict::Inconclusive
                                                                 : Verdict::Violated);
    return rep;
}

}  // namespace orlicz::conditions
