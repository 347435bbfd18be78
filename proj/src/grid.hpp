/// @file grid.hpp
/// @brief Uniform rectangular grid fields, their text/CSV serialization,
///        oscillation measurement over balls, and the radial cutoff used by
///        the discrete energy-inequality estimator.
#pragma once

#include <string>
#include <vector>

#include "growth.hpp"

namespace orlicz {

/// Scalar nodal field on a uniform grid: nodes (i,j), i in [0,nx], j in [0,ny].
struct GridField {
    int nx = 0, ny = 0;
    double hx = 0, hy = 0;
    double ox = 0, oy = 0;
    std::vector<double> values;  // row-major by j, (nx+1)*(ny+1) entries

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * (nx + 1) + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * (nx + 1) + i]; }
    double x(int i) const { return ox + i * hx; }
    double y(int j) const { return oy + j * hy; }

    void validate() const;  // spacings > 0, counts match, all values finite
};

/// Text format: header "nx ny hx hy ox oy" followed by row-major values.
std::string field_to_text(const GridField& f);
GridField field_from_text(const std::string& text);
/// CSV export: "x,y,value" per node.
std::string field_to_csv(const GridField& f);

struct OscPoint {
    double r;
    double osc;
};

/// osc = max - min over grid nodes inside each ball. Balls must contain at
/// least one node and fit inside the grid.
std::vector<OscPoint> measure_oscillation(const GridField& f, Point center,
                                          const std::vector<double>& radii);

/// Radial quartic bump: 1 on B_{(1-sigma)rho}, 0 outside B_rho, and
/// (1 - s^2)^2 across the collar, s the normalized collar coordinate. Its
/// slope is bounded by kGradientFactor/(sigma rho); a smooth bump cannot meet
/// the idealized 1/(sigma rho) bound, and 8/(3 sqrt 3) is this bump's exact
/// Lipschitz constant.
struct CutoffSpec {
    Point center;
    double rho = 0.25;
    double sigma = 0.5;
    double exponent = 2.0;  // the power the energy inequalities raise zeta to

    static constexpr double kGradientFactor = 1.5396007178390022;  // 8/(3 sqrt 3)

    double eval(double x, double y) const;
};

}  // namespace orlicz
