/// @file numerics.hpp
/// @brief Shared numerical utilities: seeded sampling, adaptive quadrature,
///        and helpers for quantities carried in log space.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

/// Raised when an iterative numerical routine fails to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic 64-bit stream (splitmix64). Distributions are hand-rolled
/// so a given seed produces the same samples on every platform and compiler;
/// reports must be byte-reproducible from the config seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Log-uniform over [lo,hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

private:
    std::uint64_t state_;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    int max_depth = 60;
};

/// Adaptive Simpson integral of f over [a,b]. Throws NumericalError if the
/// depth cap is hit before the tolerance is met on some subinterval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opt = {});

/// log(exp(a) + exp(b)) without overflow.
inline double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (!std::isfinite(a)) return a;
    return a + std::log1p(std::exp(b - a));
}

/// A nonnegative quantity that may underflow/overflow double range; carried
/// as its natural log and exponentiated only on output.
struct LogValue {
    double log;  // natural log of the value; -inf encodes zero

    static LogValue from_value(double v) {
        return LogValue{v > 0 ? std::log(v) : -std::numeric_limits<double>::infinity()};
    }
    static LogValue from_log(double lg) { return LogValue{lg}; }

    /// True when exp(log) round-trips in double range; -inf (an exact zero)
    /// counts as representable.
    bool representable() const {
        return log < 709.0 && (log > -708.0 || std::isinf(log));
    }
    /// Value as double; 0 or inf outside representable range.
    double value() const { return std::exp(log); }
};

/// Least-squares slope of y against x. Returns 0 for fewer than 2 points.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace orlicz
