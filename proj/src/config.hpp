/// @file config.hpp
/// @brief Flat sectioned key=value run configuration: every structural
///        constant maps to one line, so experiment records diff cleanly.
///        Unknown keys are rejected; parse(serialize(cfg)) == cfg.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "growth.hpp"
#include "iteration.hpp"
#include "solver.hpp"

namespace orlicz {

struct RunConfig {
    std::uint64_t seed = 0x075bcd15ULL;  ///< governs all sampling

    struct Growth {
        std::string family = "g1";
        double p = 2, q = 2, p1 = 0, q1 = 0;
        double alpha = 1, a0 = 1, b0coef = 1;
        double c1 = 1, c2 = 1, c3 = 2, c4 = 1, c5 = 1;
        double c6 = 1, c7 = 1, c8 = 1, c9 = 1, c10 = 1;
        double mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;
        double s0 = 0, b0 = 0, delta = 0, K = 1, M = 1;
        int n = 2;
        double center_x = 0.5, center_y = 0.5, t0 = 0, domain_radius = 0.5;
        // field vocabulary: constant | fixed (uses *_field_value) | logmod (uses *_amp)
        std::string p_field = "constant";
        double p_amp = 0, p_field_value = 0;
        std::string q_field = "constant";
        double q_amp = 0, q_field_value = 0;
        // coefficient fields: none | constant (base) | dist-power (base + a0 d^alpha) | jump
        std::string a_field = "none";
        double a_base = 0;
        std::string b_field = "none";
        double b_base = 0;
        bool operator==(const Growth&) const = default;
    } growth;

    struct Lambda {
        std::string family = "constant";  // constant | triplelog | quadlog | log
        double L = 0;
        double c = 1, beta = 1, cbar = 1, delta0 = 0.5;
        std::string admissibility_case = "elliptic";  // elliptic | degenerate | singular
        double r_min = 1e-12, rho0 = 0.01;
        long max_terms = 200;
        bool operator==(const Lambda&) const = default;
    } lambda;

    struct Conditions {
        std::string regime = "auto";  // auto | degenerate | singular | skip
        double R = 0;                 ///< psi threshold scale; 0 = use classified admissible R
        long young_samples = 10000;
        bool operator==(const Conditions&) const = default;
    } conditions;

    struct Iteration {
        std::string kind = "elliptic";  // degiorgi | elliptic | degenerate | singular
        double gamma = 1, xi = 0.5, a = 0.5, nu = 0.25, nubar = 1;
        double c0 = 1, c4 = 1, c5 = 1, c10 = 1;
        double deltabar = 0, R = 0;
        double omega0 = 1, rho = 0.01, log_inv_rho = 0;
        long jmax = 40;
        bool elliptic_floor = true;
        // fast-geometric lemma inputs; y0_scale_nu > 0 starts at that multiple
        // of the threshold with the threshold formed in extended precision
        double dg_c = 2, dg_b = 2, dg_delta = 1, dg_y0 = 0.25, y0_scale_nu = 0;
        bool operator==(const Iteration&) const = default;
    } iteration;

    struct Solver {
        std::string equation = "elliptic";  // elliptic | parabolic
        std::string scenario = "harmonic";  // harmonic | affine | constant | double-phase | heat
        int nx = 32, ny = 32;
        double eps_reg = 1e-8, damping = 0.5, tolerance = 1e-9, dt = 1e-3, T = 0.1;
        int max_iterations = 200, snapshot_every = 0;
        bool operator==(const Solver&) const = default;
    } solver;

    struct Output {
        std::string directory;
        std::string formats = "json,csv";
        bool operator==(const Output&) const = default;
    } output;

    bool operator==(const RunConfig&) const = default;
};

/// Parses the flat sectioned format. Throws std::invalid_argument on unknown
/// sections/keys or malformed values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical serialization: fixed section and key order, floats with 17
/// significant digits.
std::string serialize_config(const RunConfig& cfg);

/// Applies one "section.key=value" override (global keys have no dot).
void set_config_value(RunConfig& cfg, const std::string& dotted_key, const std::string& value);

/// (section, key, value) triplets in canonical order, for config echoes.
std::vector<std::array<std::string, 3>> config_items(const RunConfig& cfg);

// Builders for the library types.
GrowthSpec make_growth_spec(const RunConfig& cfg);
LambdaSpec make_lambda_spec(const RunConfig& cfg);
iteration::IterationParams make_iteration_params(const RunConfig& cfg);
solver::SolveConfig make_solve_config(const RunConfig& cfg);
solver::GridExtents make_grid_extents(const RunConfig& cfg);

}  // namespace orlicz
