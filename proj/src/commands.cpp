#include "commands.hpp"

#include <cmath>
#include <numbers>

#include "conditions.hpp"
#include "grid.hpp"
#include "solver.hpp"

namespace orlicz {

namespace cond = conditions;
namespace iter = iteration;

const char* tool_version() { return "0.1.0"; }

namespace {

ojson base_body(const RunConfig& cfg, const std::string& command) {
    ojson body;
    body["tool_version"] = tool_version();
    body["command"] = command;
    body["seed"] = cfg.seed;
    ojson echo = ojson::object();
    for (const auto& [section, key, value] : config_items(cfg)) {
        if (section.empty())
            echo[key] = value;
        else
            echo[section][key] = value;
    }
    body["config"] = std::move(echo);
    body["results"] = ojson::array();
    return body;
}

ojson witness_json(const cond::Witness& w) {
    ojson j;
    j["x1"] = w.x1;
    j["y1"] = w.y1;
    j["t1"] = w.t1;
    j["x2"] = w.x2;
    j["y2"] = w.y2;
    j["t2"] = w.t2;
    j["v"] = w.v;
    j["w"] = w.w;
    j["r"] = w.r;
    return j;
}

ojson condition_json(const cond::ConditionReport& rep) {
    ojson j;
    j["type"] = "condition";
    j["id"] = rep.id;
    j["verdict"] = cond::to_string(rep.verdict);
    j["worst_ratio"] = rep.worst_ratio;
    j["samples"] = rep.samples;
    ojson consts = ojson::object();
    for (const auto& [k, v] : rep.constants) consts[k] = v;
    j["constants"] = std::move(consts);
    j["witness"] = rep.witness ? witness_json(*rep.witness) : ojson(nullptr);
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

ojson admissibility_json(const cond::AdmissibilityReport& rep) {
    ojson j;
    j["type"] = "admissibility";
    j["id"] = rep.id;
    j["doubling"] = cond::to_string(rep.doubling);
    j["divergence"] = cond::to_string(rep.divergence);
    j["vanishing"] = cond::to_string(rep.vanishing);
    if (rep.id == "lambda-singular") j["remark_bound"] = cond::to_string(rep.remark_bound);
    j["overall"] = cond::to_string(rep.overall);
    j["truncation_radius"] = rep.truncation_radius;
    j["partial_value"] = rep.partial_value;
    j["divergence_slope"] = rep.divergence_slope;
    j["vanishing_slope"] = rep.vanishing_slope;
    if (rep.terms > 0) j["terms"] = rep.terms;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

ojson regime_json(const cond::RegimeClassification& c) {
    ojson j;
    j["type"] = "regime";
    j["verdict"] = cond::to_string(c.verdict);
    j["regime"] = cond::to_string(c.regime);
    j["mu1"] = c.mu1;
    j["mu2"] = c.mu2;
    j["mu3"] = c.mu3;
    j["mu4"] = c.mu4;
    j["delta"] = c.delta;
    j["b0"] = c.b0;
    j["admissible_R"] = c.admissible_R ? ojson(*c.admissible_R) : ojson(nullptr);
    j["r_residual"] = c.r_residual;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

ojson logvalue_json(const LogValue& v) {
    ojson j;
    if (v.representable())
        j["value"] = v.value();
    else
        j["value"] = nullptr;
    j["log"] = v.log;
    return j;
}

ojson trace_json(const iter::IterationTrace& tr, const std::string& csv_name) {
    ojson j;
    j["type"] = "trace";
    j["kind"] = iter::to_string(tr.kind);
    j["termination"] = iter::to_string(tr.termination);
    j["rows"] = tr.rows.size();
    ojson header = ojson::object();
    for (const auto& [k, v] : tr.header) header[k] = v;
    j["header"] = std::move(header);
    if (tr.has_final_bound) j["final_bound"] = logvalue_json(tr.final_bound);
    j["csv"] = csv_name;
    return j;
}

int worst_exit(const ojson& results) {
    for (const auto& r : results)
        if (r.contains("verdict") && r["verdict"] == "violated") return 1;
        else if (r.contains("overall") && r["overall"] != "holds") return 1;
    return 0;
}

}  // namespace

Report cmd_verify_conditions(const RunConfig& cfg) {
    GrowthSpec spec = make_growth_spec(cfg);
    LambdaSpec lam = make_lambda_spec(cfg);
    cond::SamplePlan plan;
    plan.seed = cfg.seed;

    Report rep;
    rep.command = "verify-conditions";
    rep.body = base_body(cfg, rep.command);
    auto& results = rep.body["results"];

    const auto cls = cond::classify_example(spec, lam);
    results.push_back(regime_json(cls));
    results.push_back(condition_json(cond::check_g1_elliptic(spec, plan)));
    results.push_back(condition_json(cond::check_g3_lower(spec, plan)));

    const double r1 = 0.99 * std::min(spec.domain_radius / 8.0,
                                      std::isfinite(lam.r_max) ? lam.r_max / 2.0
                                                               : spec.domain_radius / 8.0);
    results.push_back(condition_json(
        cond::check_g2_continuity(spec, lam, 2.0 * spec.M, {r1 / 4.0, r1}, plan)));

    std::string regime = cfg.conditions.regime;
    if (regime == "auto") {
        if (cls.verdict == cond::Verdict::Holds && cls.regime == cond::Regime::Degenerate)
            regime = "degenerate";
        else if (cls.verdict == cond::Verdict::Holds && cls.regime == cond::Regime::Singular)
            regime = "singular";
        else
            regime = "skip";
    }
    if (regime != "skip") {
        GrowthSpec ps = spec;
        if (ps.mu1 == 0 && ps.mu2 == 0 && ps.mu3 == 0 && ps.mu4 == 0) {
            ps.mu1 = cls.mu1;
            ps.mu2 = cls.mu2;
            ps.mu3 = cls.mu3;
            ps.mu4 = cls.mu4;
            ps.b0 = cls.b0;
            ps.delta = cls.delta;
        }
        double R = cfg.conditions.R;
        if (R <= 0 && cls.admissible_R) R = *cls.admissible_R;
        results.push_back(condition_json(cond::check_psi_regime(
            ps, regime == "degenerate" ? cond::PsiRegime::Degenerate : cond::PsiRegime::Singular,
            R, plan)));
    }
    results.push_back(condition_json(cond::check_young(spec, plan, cfg.conditions.young_samples)));

    rep.exit_status = worst_exit(results);
    return rep;
}

Report cmd_lambda(const RunConfig& cfg) {
    LambdaSpec lam = make_lambda_spec(cfg);
    const auto& l = cfg.lambda;

    Report rep;
    rep.command = "lambda";
    rep.body = base_body(cfg, rep.command);

    cond::AdmissibilityReport adm;
    if (l.admissibility_case == "elliptic")
        adm = cond::check_lambda_elliptic(lam, l.c, l.beta, l.rho0, l.r_min);
    else if (l.admissibility_case == "degenerate")
        adm = cond::check_lambda_parabolic_degenerate(lam, l.c, l.beta, l.delta0, l.rho0, l.r_min);
    else if (l.admissibility_case == "singular")
        adm = cond::check_lambda_parabolic_singular(lam, l.c, l.beta, l.cbar, l.delta0, l.rho0,
                                                    l.max_terms);
    else
        throw std::invalid_argument("lambda: unknown case '" + l.admissibility_case + "'");
    rep.body["results"].push_back(admissibility_json(adm));
    rep.exit_status = adm.overall == cond::Verdict::Holds ? 0 : 1;
    return rep;
}

Report cmd_iterate(const RunConfig& cfg) {
    const auto& it = cfg.iteration;
    iter::IterationParams params = make_iteration_params(cfg);
    LambdaSpec lam = make_lambda_spec(cfg);

    Report rep;
    rep.command = "iterate";
    rep.body = base_body(cfg, rep.command);
    auto& results = rep.body["results"];
    const int jmax = static_cast<int>(it.jmax);

    if (it.kind == "degiorgi") {
        const auto res = it.y0_scale_nu > 0
                             ? iter::degiorgi_lemma_scaled(it.dg_c, it.dg_b, it.dg_delta,
                                                           it.y0_scale_nu, jmax)
                             : iter::degiorgi_lemma(it.dg_c, it.dg_b, it.dg_delta, it.dg_y0, jmax);
        ojson j = trace_json(res.trace, "trace_degiorgi.csv");
        j["nu"] = res.nu;
        j["converged"] = res.converged;
        results.push_back(std::move(j));
        rep.artifacts.push_back({"trace_degiorgi.csv", iter::trace_to_csv(res.trace)});
    } else if (it.kind == "elliptic") {
        const auto th = iter::elliptic_thresholds(params, lam, it.rho);
        ojson tj;
        tj["type"] = "thresholds";
        tj["nu1"] = th.nu1;
        tj["jstar"] = th.jstar;
        tj["beta"] = th.beta;
        tj["modulus_at_quarter"] = iter::elliptic_modulus(it.rho, it.rho / 4.0, params, lam);
        results.push_back(std::move(tj));
        const auto tr = iter::elliptic_oscillation_trace(it.omega0, it.rho, params, lam, jmax);
        results.push_back(trace_json(tr, "trace_elliptic.csv"));
        rep.artifacts.push_back({"trace_elliptic.csv", iter::trace_to_csv(tr)});
    } else if (it.kind == "degenerate") {
        GrowthSpec spec = make_growth_spec(cfg);
        const auto th = iter::parabolic_degenerate_thresholds(params, lam, it.rho);
        ojson tj;
        tj["type"] = "thresholds";
        tj["beta0"] = th.beta0;
        tj["beta1"] = th.beta1;
        tj["beta2"] = th.beta2;
        tj["sigma"] = th.sigma;
        tj["s"] = th.s;
        tj["s1"] = th.s1;
        tj["s_star_lower"] = th.s_star_lower;
        tj["s_star_upper"] = th.s_star_upper;
        tj["nubar"] = th.nubar;
        results.push_back(std::move(tj));
        const auto tr = iter::parabolic_degenerate_trace(it.omega0, it.rho, params, spec, lam, jmax);
        results.push_back(trace_json(tr, "trace_degenerate.csv"));
        rep.artifacts.push_back({"trace_degenerate.csv", iter::trace_to_csv(tr)});
    } else if (it.kind == "singular") {
        GrowthSpec spec = make_growth_spec(cfg);
        const double lir = it.log_inv_rho > 0 ? it.log_inv_rho : std::log(1.0 / it.rho);
        const auto th = iter::parabolic_singular_thresholds(params, lam, lir);
        ojson tj;
        tj["type"] = "thresholds";
        tj["eta"] = th.eta;
        tj["epsilon"] = logvalue_json(th.epsilon);
        tj["jstar"] = th.jstar;
        tj["sigma0"] = logvalue_json(th.sigma0);
        tj["tau1"] = logvalue_json(th.tau1);
        tj["C"] = th.C;
        tj["beta"] = th.beta;
        results.push_back(std::move(tj));
        const auto tr = iter::parabolic_singular_trace(it.omega0, lir, params, spec, lam, jmax);
        results.push_back(trace_json(tr, "trace_singular.csv"));
        rep.artifacts.push_back({"trace_singular.csv", iter::trace_to_csv(tr)});
    } else {
        throw std::invalid_argument("iterate: unknown kind '" + it.kind + "'");
    }
    rep.exit_status = 0;
    return rep;
}

namespace {

struct Scenario {
    solver::BoundaryFn boundary;
    solver::BoundaryFn initial;
    std::function<double(double, double)> exact;  // null if no closed form
    bool parabolic = false;
};

Scenario make_scenario(const std::string& name) {
    Scenario s;
    if (name == "harmonic") {
        auto f = [](double x, double y) {
            return std::sin(std::numbers::pi * x) * std::sinh(std::numbers::pi * y) /
                   std::sinh(std::numbers::pi);
        };
        s.boundary = f;
        s.initial = f;
        s.exact = f;
    } else if (name == "affine") {
        auto f = [](double x, double y) { return 2.0 * x + y - 0.5; };
        s.boundary = f;
        s.initial = f;
        s.exact = f;
    } else if (name == "constant") {
        auto f = [](double, double) { return 1.5; };
        s.boundary = f;
        s.initial = f;
        s.exact = f;
    } else if (name == "double-phase") {
        auto f = [](double x, double y) { return x * x - y * y; };
        s.boundary = f;
        s.initial = f;
    } else if (name == "heat") {
        s.boundary = [](double, double) { return 0.0; };
        s.initial = [](double x, double y) {
            return std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y);
        };
        s.parabolic = true;
    } else {
        throw std::invalid_argument("solve: unknown scenario '" + name + "'");
    }
    return s;
}

}  // namespace

Report cmd_solve(const RunConfig& cfg) {
    GrowthSpec spec = make_growth_spec(cfg);
    // The solver grid is the unit square; the evaluation ball must cover it.
    const double need = std::hypot(std::max(spec.center.x, 1.0 - spec.center.x),
                                   std::max(spec.center.y, 1.0 - spec.center.y));
    if (spec.domain_radius < need) spec.domain_radius = need * (1.0 + 1e-9);
    LambdaSpec lam = make_lambda_spec(cfg);
    const Scenario sc = make_scenario(cfg.solver.scenario);
    const bool parabolic = sc.parabolic || cfg.solver.equation == "parabolic";
    const solver::SolveConfig scfg = make_solve_config(cfg);
    const solver::GridExtents ext = make_grid_extents(cfg);

    Report rep;
    rep.command = "solve";
    rep.body = base_body(cfg, rep.command);
    auto& results = rep.body["results"];

    try {
        GridField field;
        ojson sj;
        sj["type"] = "solve";
        sj["equation"] = parabolic ? "parabolic" : "elliptic";
        sj["scenario"] = cfg.solver.scenario;
        sj["nx"] = ext.nx;
        sj["ny"] = ext.ny;
        if (parabolic) {
            auto pr = solver::solve_parabolic(spec, sc.initial, sc.boundary, ext, cfg.solver.T,
                                              scfg);
            field = pr.field;
            sj["steps"] = pr.times.size();
            sj["picard_iterations"] = pr.total_picard_iterations;
            sj["t_end"] = pr.times.back();
            for (std::size_t i = 0; i + 1 < pr.snapshots.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof(name), "field_%06zu.txt", i);
                rep.artifacts.push_back({name, field_to_text(pr.snapshots[i])});
            }
            if (cfg.solver.scenario == "heat") {
                const int ci = ext.nx / 2, cj = ext.ny / 2;
                const double measured = field.at(ci, cj);
                const double expected = std::exp(-2.0 * std::numbers::pi * std::numbers::pi *
                                                 pr.times.back());
                sj["center_value"] = measured;
                sj["heat_decay_reference"] = expected;
            }
        } else {
            solver::SolveStats stats;
            field = solver::solve_elliptic(spec, sc.boundary, ext, scfg, &stats);
            sj["picard_iterations"] = stats.iterations;
            sj["residual"] = stats.residual;
        }
        if (sc.exact) {
            double err = 0;
            for (int j = 1; j < field.ny; ++j)
                for (int i = 1; i < field.nx; ++i)
                    err = std::max(err, std::abs(field.at(i, j) - sc.exact(field.x(i), field.y(j))));
            sj["max_error_vs_reference"] = err;
        }
        double lo = field.values[0], hi = field.values[0];
        for (double v : field.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        sj["min_value"] = lo;
        sj["max_value"] = hi;
        results.push_back(std::move(sj));
        rep.artifacts.push_back({"field_final.txt", field_to_text(field)});

        // oscillation decay around the declared center
        const double h = std::max(field.hx, field.hy);
        const double r_max = 0.45;
        std::vector<double> radii;
        for (int k = 0; k < 8; ++k)
            radii.push_back(std::exp(std::log(4.0 * h) +
                                     (std::log(r_max) - std::log(4.0 * h)) * k / 7.0));
        iter::IterationParams params = make_iteration_params(cfg);
        params.M = std::max(std::abs(lo), std::abs(hi));
        if (params.M <= 0) params.M = 1.0;
        auto mod = solver::empirical_modulus({&field}, spec.center, radii, params, lam);
        ojson mj;
        mj["type"] = "modulus";
        mj["fitted_slope"] = mod.fitted_slope;
        mj["monotone"] = mod.monotone;
        mj["zero_oscillation"] = mod.zero_oscillation;
        mj["gamma_min"] = mod.gamma_min;
        results.push_back(std::move(mj));
        std::string osc_csv = "r,osc\n";
        for (const auto& pt : mod.curve) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", pt.r, pt.osc);
            osc_csv += buf;
        }
        rep.artifacts.push_back({"oscillation.csv", osc_csv});
        rep.exit_status = 0;
    } catch (const NumericalError& err) {
        ojson ej;
        ej["type"] = "error";
        ej["what"] = err.what();
        results.push_back(std::move(ej));
        rep.exit_status = 3;
    }
    return rep;
}

Report merge_reports(const std::vector<std::string>& report_jsons) {
    Report rep;
    rep.command = "report-merge";
    rep.body["tool_version"] = tool_version();
    rep.body["command"] = rep.command;
    rep.body["reports"] = ojson::array();
    int worst = 0;
    for (const std::string& text : report_jsons) {
        ojson j = ojson::parse(text, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("report-merge: malformed report JSON");
        if (j.contains("exit_status") && j["exit_status"].is_number_integer())
            worst = std::max(worst, j["exit_status"].get<int>());
        rep.body["reports"].push_back(std::move(j));
    }
    rep.exit_status = worst;
    return rep;
}

Report run_command(const RunConfig& cfg, const std::string& command) {
    if (command == "verify-conditions") return cmd_verify_conditions(cfg);
    if (command == "lambda") return cmd_lambda(cfg);
    if (command == "iterate") return cmd_iterate(cfg);
    if (command == "solve") return cmd_solve(cfg);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace orlicz
