#include "grid.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orlicz {

void GridField::validate() const {
    if (nx < 1 || ny < 1) throw std::invalid_argument("grid: need at least one cell per axis");
    if (!(hx > 0.0) || !(hy > 0.0)) throw std::invalid_argument("grid: spacings must be > 0");
    if (values.size() != static_cast<std::size_t>(nx + 1) * (ny + 1))
        throw std::invalid_argument("grid: value count does not match extents");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("grid: non-finite value");
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string field_to_text(const GridField& f) {
    f.validate();
    std::string out = std::to_string(f.nx) + " " + std::to_string(f.ny) + " " + fmt17(f.hx) +
                      " " + fmt17(f.hy) + " " + fmt17(f.ox) + " " + fmt17(f.oy) + "\n";
    for (int j = 0; j <= f.ny; ++j) {
        for (int i = 0; i <= f.nx; ++i) {
            out += fmt17(f.at(i, j));
            out += (i == f.nx) ? '\n' : ' ';
        }
    }
    return out;
}

GridField field_from_text(const std::string& text) {
    std::istringstream in(text);
    GridField f;
    if (!(in >> f.nx >> f.ny >> f.hx >> f.hy >> f.ox >> f.oy))
        throw std::invalid_argument("field: malformed header");
    if (f.nx < 1 || f.ny < 1 || !(f.hx > 0) || !(f.hy > 0))
        throw std::invalid_argument("field: bad extents in header");
    f.values.resize(static_cast<std::size_t>(f.nx + 1) * (f.ny + 1));
    for (double& v : f.values)
        if (!(in >> v)) throw std::invalid_argument("field: truncated value section");
    f.validate();
    return f;
}

std::string field_to_csv(const GridField& f) {
    f.validate();
    std::string out = "x,y,value\n";
    for (int j = 0; j <= f.ny; ++j)
        for (int i = 0; i <= f.nx; ++i)
            out += fmt17(f.x(i)) + "," + fmt17(f.y(j)) + "," + fmt17(f.at(i, j)) + "\n";
    return out;
}

std::vector<OscPoint> measure_oscillation(const GridField& f, Point center,
                                          const std::vector<double>& radii) {
    f.validate();
    std::vector<OscPoint> out;
    for (double r : radii) {
        if (!(r > 0.0)) throw std::invalid_argument("oscillation: radius must be > 0");
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        long count = 0;
        for (int j = 0; j <= f.ny; ++j)
            for (int i = 0; i <= f.nx; ++i) {
                const double dx = f.x(i) - center.x, dy = f.y(j) - center.y;
                if (dx * dx + dy * dy > r * r) continue;
                ++count;
                lo = std::min(lo, f.at(i, j));
                hi = std::max(hi, f.at(i, j));
            }
        if (count == 0) throw std::invalid_argument("oscillation: ball contains no grid nodes");
        out.push_back({r, hi - lo});
    }
    return out;
}

double CutoffSpec::eval(double x, double y) const {
    const double d = std::hypot(x - center.x, y - center.y);
    if (d <= (1.0 - sigma) * rho) return 1.0;
    if (d >= rho) return 0.0;
    const double s = (d - (1.0 - sigma) * rho) / (sigma * rho);
    const double t = 1.0 - s * s;
    return t * t;
}

}  // namespace orlicz
