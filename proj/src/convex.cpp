#include "ritails/convex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ritails {

ScalarFunction psi_tilde(const PsiFunction& psi) {
  const double lo = std::max(1.0, psi.support_lo());
  const double hi = psi.support_hi();
  if (!(lo <= hi)) {
    throw std::domain_error("psi_tilde: empty support");
  }
  ScalarFunction h;
  h.lo = lo;
  h.hi = hi;
  h.eval = [psi](double p) -> double {
    const double v = psi(p);
    if (!std::isfinite(v)) return kInf;
    return p * std::log(v);
  };
  return h;
}

namespace {

double objective(const ScalarFunction& h, double x, double y) {
  const double hy = h.eval(y);
  if (!std::isfinite(hy)) return -kInf;
  return x * y - hy;
}

double refine_and_pick(const ScalarFunction& h, double x,
                       const std::vector<double>& pts) {
  double best = -kInf;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v = objective(h, x, pts[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  if (!std::isfinite(best)) return -kInf;  // h infinite everywhere probed
  // bracket with the nearest distinct neighbors (the grid may contain
  // duplicate endpoints)
  const double c = pts[best_i];
  double a = c, b = c;
  for (std::size_t i = best_i; i-- > 0;) {
    if (pts[i] < c) {
      a = pts[i];
      break;
    }
  }
  for (std::size_t i = best_i + 1; i < pts.size(); ++i) {
    if (pts[i] > c) {
      b = pts[i];
      break;
    }
  }
  if (b > a) {
    const GoldenResult r =
        golden_max([&](double y) { return objective(h, x, y); }, a, b, 1e-10);
    best = std::max(best, r.value);
  }
  return best;
}

double legendre_finite(const ScalarFunction& h, double x, double lo,
                       double hi) {
  if (hi == lo) return objective(h, x, lo);
  std::vector<double> pts;
  pts.reserve(513);
  for (int i = 0; i < 256; ++i) {
    pts.push_back(lo + (hi - lo) * i / 255.0 * (1.0 - 1e-12));
  }
  // log clustering toward hi; picks up maximizers crowding a blowup edge
  for (int i = 0; i < 256; ++i) {
    pts.push_back(hi - (hi - lo) * std::pow(10.0, -8.0 * i / 255.0));
  }
  if (std::isfinite(h.eval(hi))) pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  return refine_and_pick(h, x, pts);
}

}  // namespace

double legendre(const ScalarFunction& h, double x) {
  if (!std::isfinite(h.hi)) {
    // Unbounded right end: expand geometrically until the objective
    // turns over; still rising at the cap means a divergent supremum.
    const double lo = h.lo;
    double y = std::max(lo + 1.0, 2.0 * std::fabs(lo) + 1.0);
    double prev = std::max(objective(h, x, lo), objective(h, x, y));
    constexpr double kCap = 1e12;
    while (y < kCap) {
      const double y2 = y * 2.0;
      const double v = objective(h, x, y2);
      if (v <= prev) break;
      prev = v;
      y = y2;
    }
    if (y >= kCap) return kInf;
    return legendre_finite(h, x, lo, y * 2.0);
  }
  return legendre_finite(h, x, h.lo, h.hi);
}

TailFunction gls_upper_tail(const PsiFunction& psi) {
  const ScalarFunction h = psi_tilde(psi);
  ScalarFn eval = [h](double t) -> double {
    if (t <= 1.0) return 1.0;
    const double star = legendre(h, std::log(t));
    if (!std::isfinite(star)) return 0.0;
    return std::min(1.0, std::exp(-star));
  };
  return TailFunction(std::move(eval), 1.0, 2.0,
                      Provenance::OptimizationBound);
}

TailFunction gls_lower_tail(const PsiFunction& psi, double C) {
  if (psi.form() != PsiFunction::Form::GridBlowup) {
    throw std::domain_error("gls_lower_tail: psi must be of gridBlowup form");
  }
  if (!(C > 0.0)) {
    throw std::domain_error("gls_lower_tail: C must be > 0");
  }
  const ScalarFunction h = psi_tilde(psi);
  ScalarFn eval = [h, C](double t) -> double {
    const double s = t / C;
    if (s <= 1.0) return 1.0;
    const double star = legendre(h, std::log(s));
    if (!std::isfinite(star)) return 0.0;
    return std::clamp(std::exp(-star), 0.0, 1.0);
  };
  return TailFunction(std::move(eval), 1.0, 2.0,
                      Provenance::OptimizationBound);
}

bool convex_on_grid(const ScalarFn& f, double lo, double hi, int points) {
  const double step = (hi - lo) / (points - 1);
  double scale = 1.0;
  for (int i = 1; i + 1 < points; ++i) {
    const double y = lo + i * step;
    const double d2 = f(y - step) - 2.0 * f(y) + f(y + step);
    scale = std::max(scale, std::fabs(f(y)));
    if (d2 < -1e-9 * scale) return false;
  }
  return true;
}

}  // namespace ritails
