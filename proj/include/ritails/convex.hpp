#pragma once

#include "ritails/functions.hpp"
#include "ritails/tail.hpp"

namespace ritails {

/// Scalar function on an interval; eval may return +infinity at or
/// beyond the domain edge.
struct ScalarFunction {
  double lo = 0.0;
  double hi = kInf;  // +infinity for an unbounded right end
  ScalarFn eval;
  bool convexity_checked = false;
};

/// psi~(p) = p * log psi(p) on [max(1, A), B).
ScalarFunction psi_tilde(const PsiFunction& psi);

/// h*(x) = sup_y in domain (x*y - h(y)). Coarse 512-point grid (with
/// logarithmic clustering toward a finite right endpoint where h blows
/// up) followed by golden-section refinement to relative tolerance
/// 1e-10. Returns +infinity when the supremum diverges on an unbounded
/// domain.
double legendre(const ScalarFunction& h, double x);

/// t -> min(1, exp(-psi~*(log t))); t0 = 2, optimization-bound.
TailFunction gls_upper_tail(const PsiFunction& psi);

/// t -> exp(-psi~*(log(t/C))) for gridBlowup psi; C is user-supplied.
TailFunction gls_lower_tail(const PsiFunction& psi, double C);

/// Second-difference convexity check on a grid over [lo, hi].
bool convex_on_grid(const ScalarFn& f, double lo, double hi, int points = 1000);

}  // namespace ritails
