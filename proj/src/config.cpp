#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace orlicz {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct KeyDef {
    std::string section;  // "" = global
    std::string key;
    std::function<std::string(const RunConfig&)> get;
    std::function<void(RunConfig&, const std::string&)> set;
};

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("config: malformed number '" + s + "'");
    return v;
}

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("config: malformed integer '" + s + "'");
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw std::invalid_argument("config: malformed bool '" + s + "'");
}

std::vector<KeyDef> registry() {
    std::vector<KeyDef> defs;
    auto D = [&](const char* sec, const char* key, auto member) {
        defs.push_back({sec, key,
                        [member](const RunConfig& c) { return fmt17(c.*member); },
                        [member](RunConfig& c, const std::string& v) { c.*member = parse_double(v); }});
    };
    auto sub = [&defs](const char* sec, const char* key, auto section_member, auto field_member,
                       auto fmt, auto parse) {
        defs.push_back(
            {sec, key,
             [section_member, field_member, fmt](const RunConfig& c) {
                 return fmt((c.*section_member).*field_member);
             },
             [section_member, field_member, parse](RunConfig& c, const std::string& v) {
                 (c.*section_member).*field_member = parse(v);
             }});
    };
    auto fmt_d = [](double v) { return fmt17(v); };
    auto fmt_i = [](int v) { return std::to_string(v); };
    auto fmt_l = [](long v) { return std::to_string(v); };
    auto fmt_s = [](const std::string& v) { return v; };
    auto fmt_b = [](bool v) { return std::string(v ? "true" : "false"); };
    auto parse_s = [](const std::string& v) { return v; };
    auto parse_i = [](const std::string& v) { return static_cast<int>(parse_long(v)); };

    defs.push_back({"", "seed",
                    [](const RunConfig& c) { return std::to_string(c.seed); },
                    [](RunConfig& c, const std::string& v) {
                        c.seed = std::stoull(v);
                    }});

    using RC = RunConfig;
    auto G = &RC::growth;
    using Gt = RC::Growth;
    sub("growth", "family", G, &Gt::family, fmt_s, parse_s);
    for (auto [k, m] : std::initializer_list<std::pair<const char*, double Gt::*>>{
             {"p", &Gt::p},           {"q", &Gt::q},           {"p1", &Gt::p1},
             {"q1", &Gt::q1},         {"alpha", &Gt::alpha},   {"a0", &Gt::a0},
             {"b0coef", &Gt::b0coef}, {"c1", &Gt::c1},         {"c2", &Gt::c2},
             {"c3", &Gt::c3},         {"c4", &Gt::c4},         {"c5", &Gt::c5},
             {"c6", &Gt::c6},         {"c7", &Gt::c7},         {"c8", &Gt::c8},
             {"c9", &Gt::c9},         {"c10", &Gt::c10},       {"mu1", &Gt::mu1},
             {"mu2", &Gt::mu2},       {"mu3", &Gt::mu3},       {"mu4", &Gt::mu4},
             {"s0", &Gt::s0},         {"b0", &Gt::b0},         {"delta", &Gt::delta},
             {"K", &Gt::K},           {"M", &Gt::M},           {"center_x", &Gt::center_x},
             {"center_y", &Gt::center_y}, {"t0", &Gt::t0},
             {"domain_radius", &Gt::domain_radius}, {"p_amp", &Gt::p_amp},
             {"p_field_value", &Gt::p_field_value}, {"q_amp", &Gt::q_amp},
             {"q_field_value", &Gt::q_field_value}, {"a_base", &Gt::a_base},
             {"b_base", &Gt::b_base}})
        sub("growth", k, G, m, fmt_d, parse_double);
    sub("growth", "n", G, &Gt::n, fmt_i, parse_i);
    sub("growth", "p_field", G, &Gt::p_field, fmt_s, parse_s);
    sub("growth", "q_field", G, &Gt::q_field, fmt_s, parse_s);
    sub("growth", "a_field", G, &Gt::a_field, fmt_s, parse_s);
    sub("growth", "b_field", G, &Gt::b_field, fmt_s, parse_s);
    (void)D;

    auto L = &RC::lambda;
    using Lt = RC::Lambda;
    sub("lambda", "family", L, &Lt::family, fmt_s, parse_s);
    for (auto [k, m] : std::initializer_list<std::pair<const char*, double Lt::*>>{
             {"L", &Lt::L}, {"c", &Lt::c}, {"beta", &Lt::beta}, {"cbar", &Lt::cbar},
             {"delta0", &Lt::delta0}, {"r_min", &Lt::r_min}, {"rho0", &Lt::rho0}})
        sub("lambda", k, L, m, fmt_d, parse_double);
    sub("lambda", "case", L, &Lt::admissibility_case, fmt_s, parse_s);
    sub("lambda", "max_terms", L, &Lt::max_terms, fmt_l, parse_long);

    auto C = &RC::conditions;
    using Ct = RC::Conditions;
    sub("conditions", "regime", C, &Ct::regime, fmt_s, parse_s);
    sub("conditions", "R", C, &Ct::R, fmt_d, parse_double);
    sub("conditions", "young_samples", C, &Ct::young_samples, fmt_l, parse_long);

    auto I = &RC::iteration;
    using It = RC::Iteration;
    sub("iteration", "kind", I, &It::kind, fmt_s, parse_s);
    for (auto [k, m] : std::initializer_list<std::pair<const char*, double It::*>>{
             {"gamma", &It::gamma},   {"xi", &It::xi},
             {"a", &It::a},           {"nu", &It::nu},
             {"nubar", &It::nubar},   {"c0", &It::c0},
             {"c4", &It::c4},         {"c5", &It::c5},
             {"c10", &It::c10},       {"deltabar", &It::deltabar},
             {"R", &It::R},           {"omega0", &It::omega0},
             {"rho", &It::rho},       {"log_inv_rho", &It::log_inv_rho},
             {"dg_c", &It::dg_c},     {"dg_b", &It::dg_b},
             {"dg_delta", &It::dg_delta}, {"dg_y0", &It::dg_y0},
             {"y0_scale_nu", &It::y0_scale_nu}})
        sub("iteration", k, I, m, fmt_d, parse_double);
    sub("iteration", "jmax", I, &It::jmax, fmt_l, parse_long);
    sub("iteration", "elliptic_floor", I, &It::elliptic_floor, fmt_b, parse_bool);

    auto S = &RC::solver;
    using St = RC::Solver;
    sub("solver", "equation", S, &St::equation, fmt_s, parse_s);
    sub("solver", "scenario", S, &St::scenario, fmt_s, parse_s);
    sub("solver", "nx", S, &St::nx, fmt_i, parse_i);
    sub("solver", "ny", S, &St::ny, fmt_i, parse_i);
    for (auto [k, m] : std::initializer_list<std::pair<const char*, double St::*>>{
             {"eps_reg", &St::eps_reg}, {"damping", &St::damping},
             {"tolerance", &St::tolerance}, {"dt", &St::dt}, {"T", &St::T}})
        sub("solver", k, S, m, fmt_d, parse_double);
    sub("solver", "max_iterations", S, &St::max_iterations, fmt_i, parse_i);
    sub("solver", "snapshot_every", S, &St::snapshot_every, fmt_i, parse_i);

    auto O = &RC::output;
    using Ot = RC::Output;
    sub("output", "directory", O, &Ot::directory, fmt_s, parse_s);
    sub("output", "formats", O, &Ot::formats, fmt_s, parse_s);
    return defs;
}

const std::vector<KeyDef>& key_defs() {
    static const std::vector<KeyDef> defs = registry();
    return defs;
}

const KeyDef* find_key(const std::string& section, const std::string& key) {
    for (const KeyDef& d : key_defs())
        if (d.section == section && d.key == key) return &d;
    return nullptr;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const KeyDef* def = find_key(section, key);
        if (!def)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" +
                                        (section.empty() ? key : section + "." + key) + "'");
        def->set(cfg, value);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    std::string section;
    bool first = true;
    for (const KeyDef& d : key_defs()) {
        if (d.section != section || (first && !d.section.empty())) {
            if (!d.section.empty()) out += (out.empty() ? "[" : "\n[") + d.section + "]\n";
            section = d.section;
        }
        first = false;
        out += d.key + " = " + d.get(cfg) + "\n";
    }
    return out;
}

std::vector<std::array<std::string, 3>> config_items(const RunConfig& cfg) {
    std::vector<std::array<std::string, 3>> items;
    for (const KeyDef& d : key_defs()) items.push_back({d.section, d.key, d.get(cfg)});
    return items;
}

void set_config_value(RunConfig& cfg, const std::string& dotted_key, const std::string& value) {
    const auto dot = dotted_key.find('.');
    const std::string section = dot == std::string::npos ? "" : dotted_key.substr(0, dot);
    const std::string key = dot == std::string::npos ? dotted_key : dotted_key.substr(dot + 1);
    const KeyDef* def = find_key(section, key);
    if (!def) throw std::invalid_argument("config: unknown key '" + dotted_key + "'");
    def->set(cfg, value);
}

// --- builders ---------------------------------------------------------------

namespace {

ScalarField make_exponent_field(const std::string& kind, double base, double amp, double value,
                                Point center, const char* what) {
    if (kind == "constant") return nullptr;
    if (kind == "fixed")
        return [value](double, double, double) { return value; };
    if (kind == "logmod")
        return [base, amp, center](double x, double y, double) {
            const double d = std::max(std::hypot(x - center.x, y - center.y), 1e-12);
            return base + amp / std::log(1.0 / d);
        };
    throw std::invalid_argument(std::string("config: unknown ") + what + " field kind '" + kind +
                                "'");
}

ScalarField make_coefficient_field(const std::string& kind, double base, double scale,
                                   double alpha, Point center, const char* what) {
    if (kind == "none") return nullptr;
    if (kind == "constant")
        return [base](double, double, double) { return base; };
    if (kind == "dist-power")
        return [base, scale, alpha, center](double x, double y, double) {
            return base + scale * std::pow(std::hypot(x - center.x, y - center.y), alpha);
        };
    if (kind == "jump")
        return [base, center](double x, double, double) { return x > center.x ? base : 0.0; };
    throw std::invalid_argument(std::string("config: unknown ") + what + " field kind '" + kind +
                                "'");
}

}  // namespace

GrowthSpec make_growth_spec(const RunConfig& cfg) {
    const auto& g = cfg.growth;
    GrowthSpec s;
    if (g.family == "g1")
        s.family = GrowthFamily::G1;
    else if (g.family == "g2")
        s.family = GrowthFamily::G2;
    else if (g.family == "g3")
        s.family = GrowthFamily::G3;
    else if (g.family == "g4")
        s.family = GrowthFamily::G4;
    else
        throw std::invalid_argument("config: unknown growth family '" + g.family + "'");
    s.p = g.p;
    s.q = g.q;
    s.p1 = g.p1;
    s.q1 = g.q1;
    s.alpha = g.alpha;
    s.a0 = g.a0;
    s.b0coef = g.b0coef;
    s.c1 = g.c1;
    s.c2 = g.c2;
    s.c3 = g.c3;
    s.c4 = g.c4;
    s.c5 = g.c5;
    s.c6 = g.c6;
    s.c7 = g.c7;
    s.c8 = g.c8;
    s.c9 = g.c9;
    s.c10 = g.c10;
    s.mu1 = g.mu1;
    s.mu2 = g.mu2;
    s.mu3 = g.mu3;
    s.mu4 = g.mu4;
    s.s0 = g.s0;
    s.b0 = g.b0;
    s.delta = g.delta;
    s.K = g.K;
    s.M = g.M;
    s.n = g.n;
    s.center = {g.center_x, g.center_y};
    s.t0 = g.t0;
    s.domain_radius = g.domain_radius;
    s.p_field = make_exponent_field(g.p_field, g.p, g.p_amp, g.p_field_value, s.center, "p");
    s.q_field = make_exponent_field(g.q_field, g.q, g.q_amp, g.q_field_value, s.center, "q");
    s.a_field = make_coefficient_field(g.a_field, g.a_base, g.a0, g.alpha, s.center, "a");
    s.b_field = make_coefficient_field(g.b_field, g.b_base, g.b0coef, g.alpha, s.center, "b");
    s.validate();
    return s;
}

LambdaSpec make_lambda_spec(const RunConfig& cfg) {
    const auto& l = cfg.lambda;
    if (l.family == "constant") return LambdaSpec::constant(l.L);
    if (l.family == "triplelog") return LambdaSpec::triple_log(l.L);
    if (l.family == "quadlog") return LambdaSpec::quad_log_variant(l.L);
    if (l.family == "log") {
        const double L = l.L;
        return LambdaSpec::custom_fn([L](double r) { return L * std::log(1.0 / r); }, 1.0);
    }
    throw std::invalid_argument("config: unknown lambda family '" + l.family + "'");
}

iteration::IterationParams make_iteration_params(const RunConfig& cfg) {
    iteration::IterationParams p;
    p.n = cfg.growth.n;
    p.gamma = cfg.iteration.gamma;
    p.c = cfg.lambda.c;
    p.beta = cfg.lambda.beta;
    p.cbar = cfg.lambda.cbar;
    p.delta0 = cfg.lambda.delta0;
    p.c0 = std::max(cfg.growth.c2, cfg.growth.c6);
    p.c4 = cfg.iteration.c4;
    p.c5 = cfg.iteration.c5;
    p.c10 = cfg.iteration.c10;
    p.mu1 = cfg.growth.mu1;
    p.mu2 = cfg.growth.mu2;
    p.mu3 = cfg.growth.mu3;
    p.mu4 = cfg.growth.mu4;
    p.delta = cfg.growth.delta;
    p.deltabar = cfg.iteration.deltabar;
    p.M = cfg.growth.M;
    p.s0 = cfg.growth.s0;
    p.b0 = cfg.growth.b0;
    p.xi = cfg.iteration.xi;
    p.a = cfg.iteration.a;
    p.nu = cfg.iteration.nu;
    p.nubar = cfg.iteration.nubar;
    p.R = cfg.iteration.R;
    p.elliptic_additive_floor = cfg.iteration.elliptic_floor;
    return p;
}

solver::SolveConfig make_solve_config(const RunConfig& cfg) {
    solver::SolveConfig sc;
    sc.eps_reg = cfg.solver.eps_reg;
    sc.damping = cfg.solver.damping;
    sc.tolerance = cfg.solver.tolerance;
    sc.max_iterations = cfg.solver.max_iterations;
    sc.dt = cfg.solver.dt;
    sc.snapshot_every = cfg.solver.snapshot_every;
    return sc;
}

solver::GridExtents make_grid_extents(const RunConfig& cfg) {
    solver::GridExtents e;
    e.nx = cfg.solver.nx;
    e.ny = cfg.solver.ny;
    return e;
}

}  // namespace orlicz
