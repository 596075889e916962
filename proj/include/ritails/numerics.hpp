#pragma once

#include <functional>

namespace ritails {

using ScalarFn = std::function<double(double)>;

/// Smallest t in [lo, hi] with f(t) <= level, for nonincreasing f.
/// Geometric bisection to the given relative tolerance; throws
/// std::range_error (with the bracketing values) when the level is
/// not attained inside [lo, hi].
double solve_nonincreasing(const ScalarFn& f, double level, double lo,
                           double hi, double reltol = 1e-12);

/// Solves g(s) = target for increasing g. The upper bracket starts at
/// hi0 and doubles up to hi_max before giving up.
double invert_increasing(const ScalarFn& g, double target, double lo,
                         double hi0, double hi_max, double reltol = 1e-12);

struct GoldenResult {
  double x;
  double value;
};

/// Golden-section minimization on [a, b] to relative x-tolerance.
GoldenResult golden_min(const ScalarFn& f, double a, double b,
                        double reltol = 1e-10);
GoldenResult golden_max(const ScalarFn& f, double a, double b,
                        double reltol = 1e-10);

/// Adaptive Simpson quadrature on [a, b] to relative tolerance.
double adaptive_simpson(const ScalarFn& f, double a, double b,
                        double reltol = 1e-10);

}  // namespace ritails
