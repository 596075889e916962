#include "ritails/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ritails {

double solve_nonincreasing(const ScalarFn& f, double level, double lo,
                           double hi, double reltol) {
  if (!(lo > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("solve_nonincreasing: need 0 < lo < hi");
  }
  if (f(lo) <= level) return lo;
  const double fhi = f(hi);
  if (fhi > level) {
    std::ostringstream oss;
    oss << "solve_nonincreasing: level " << level << " not attained; f(" << lo
        << ")=" << f(lo) << ", f(" << hi << ")=" << fhi;
    throw std::range_error(oss.str());
  }
  // Invariant: f(lo) > level >= f(hi).
  for (int i = 0; i < 400 && hi / lo - 1.0 > reltol; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (f(mid) <= level) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double invert_increasing(const ScalarFn& g, double target, double lo,
                         double hi0, double hi_max, double reltol) {
  if (!(lo > 0.0) || !(hi0 > lo)) {
    throw std::invalid_argument("invert_increasing: need 0 < lo < hi0");
  }
  if (g(lo) > target) {
    std::ostringstream oss;
    oss << "invert_increasing: target " << target << " below g(lo)=" << g(lo);
    throw std::range_error(oss.str());
  }
  double hi = hi0;
  while (g(hi) < target) {
    if (hi >= hi_max) {
      std::ostringstream oss;
      oss << "invert_increasing: target " << target
          << " not bracketed below hi_max=" << hi_max << ", g(hi)=" << g(hi);
      throw std::range_error(oss.str());
    }
    hi = std::min(hi * 2.0, hi_max);
  }
  for (int i = 0; i < 400 && hi / lo - 1.0 > reltol; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (g(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

GoldenResult golden_min(const ScalarFn& f, double a, double b, double reltol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  for (int i = 0; i < 300 && (b - a) > reltol * scale; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

GoldenResult golden_max(const ScalarFn& f, double a, double b, double reltol) {
  const GoldenResult r =
      golden_min([&](double x) { return -f(x); }, a, b, reltol);
  return {r.x, -r.value};
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const ScalarFn& f, double a, double m, double b, double fa,
                     double fm, double fb, double whole, double eps,
                     int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, lm, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         adaptive_step(f, m, rm, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, double reltol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, a, b);
  const double eps = std::max(std::fabs(whole) * reltol, 1e-300);
  return adaptive_step(f, a, m, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace ritails
