#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ritails/convex.hpp"

using namespace ritails;

TEST_CASE("legendre transform of the quadratic") {
  // h(y) = y^2 on [0, inf): h*(x) = x^2/4 for x >= 0
  const ScalarFunction h{0.0, kInf, [](double y) { return y * y; }, true};
  CHECK(legendre(h, 2.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(legendre(h, 10.0) == doctest::Approx(25.0).epsilon(1e-8));
}

TEST_CASE("legendre transform on a bounded domain saturates at the edge") {
  // h(y) = 0 on [0, 1]: h*(x) = max(0, x)
  const ScalarFunction h{0.0, 1.0, [](double) { return 0.0; }, true};
  CHECK(legendre(h, 3.0) == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("psi-tilde of the power-root family") {
  const PsiFunction psi = PsiFunction::power_root(2.0);
  const ScalarFunction h = psi_tilde(psi);
  CHECK(h.eval(4.0) == doctest::Approx(4.0 * std::log(2.0)));
  CHECK(h.eval(1.0) == doctest::Approx(0.0));
}

TEST_CASE("legendre of psi-tilde matches the closed form for power roots") {
  // sup_p (x p - (p log p)/m) = e^{m x - 1}/m when the maximizer is interior
  for (double m : {1.0, 2.0}) {
    const ScalarFunction h = psi_tilde(PsiFunction::power_root(m));
    for (double t : {3.0, 10.0, 100.0}) {
      const double x = std::log(t);
      if (x <= 1.0 / m) continue;
      const double want = std::exp(m * x - 1.0) / m;
      CHECK(legendre(h, x) == doctest::Approx(want).epsilon(1e-6));
    }
  }
}

TEST_CASE("gls upper tail for power roots") {
  const TailFunction T = gls_upper_tail(PsiFunction::power_root(2.0));
  const double e = std::exp(1.0);
  CHECK(T(10.0) == doctest::Approx(std::exp(-100.0 / (2.0 * e))).epsilon(1e-6));
  CHECK(T(0.5) == 1.0);
  CHECK(T.provenance() == Provenance::OptimizationBound);
}

TEST_CASE("gls lower tail sits below the upper tail") {
  const PsiFunction psi = PsiFunction::grid_blowup(2.0, 1.0);
  const TailFunction up = gls_upper_tail(psi);
  const TailFunction lo = gls_lower_tail(psi, 2.0);
  for (double t : {10.0, 100.0, 1000.0}) {
    CHECK(lo(t) >= up(t));  // shifting the argument down can only raise the value
  }
  CHECK_THROWS_AS(gls_lower_tail(psi, 0.0), std::domain_error);
  CHECK_THROWS_AS(gls_lower_tail(PsiFunction::power_root(2.0), 1.0),
                  std::domain_error);
}

TEST_CASE("convexity probe") {
  CHECK(convex_on_grid([](double x) { return x * x; }, 0.0, 10.0));
  CHECK_FALSE(convex_on_grid([](double x) { return std::sin(x); }, 0.0, 3.0));
}
