#include "numerics.hpp"

#include <limits>

namespace orlicz {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth,
                     bool& ok) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) {
        ok = false;
        return left + right;
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, ok) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, ok);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    // Absolute tolerance anchored to the first whole-interval estimate with a
    // small floor so integrals that are identically ~0 still terminate.
    const double tol = opt.rel_tol * std::max(std::abs(whole), 1e-300);
    bool ok = true;
    const double result = adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, opt.max_depth, ok);
    if (!ok)
        throw NumericalError("adaptive quadrature did not converge on [" + std::to_string(a) +
                             "," + std::to_string(b) + "] after " + std::to_string(opt.max_depth) +
                             " bisection levels");
    return result;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

}  // namespace orlicz
