#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ritails/functions.hpp"

using namespace ritails;

TEST_CASE("power Young functions") {
  const YoungFunction N = YoungFunction::power(2.0);
  CHECK(N(3.0) == doctest::Approx(9.0));
  CHECK(N(0.0) == 0.0);
  CHECK(N.inverse(9.0) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(N.strictly_increasing());
  CHECK_THROWS_AS(YoungFunction::power(0.5), std::invalid_argument);
}

TEST_CASE("power-log Young functions") {
  const YoungFunction N = YoungFunction::power_log(2.0, 1.0);
  const double e = std::exp(1.0);
  CHECK(N(2.0) == doctest::Approx(4.0 * std::log(e + 2.0)));
  CHECK(N.inverse(N(5.0)) == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(N.strictly_increasing());
}

TEST_CASE("pointwise maximum of Young functions") {
  const YoungFunction M =
      young_max(YoungFunction::power(2.0), YoungFunction::power(3.0));
  CHECK(M(0.5) == doctest::Approx(0.25));  // u^2 wins below 1
  CHECK(M(2.0) == doctest::Approx(8.0));   // u^3 wins above 1
}

TEST_CASE("grid-blowup generating function") {
  const PsiFunction psi = PsiFunction::grid_blowup(2.0, 1.0);
  CHECK(psi(1.5) == doctest::Approx(2.0));
  CHECK(psi(1.0) == doctest::Approx(1.0));
  CHECK(std::isinf(psi(2.0)));
  CHECK(std::isinf(psi(0.5)));
  CHECK(psi.support_lo() == 1.0);
  CHECK(psi.support_hi() == 2.0);
}

TEST_CASE("power-root generating function") {
  const PsiFunction psi = PsiFunction::power_root(2.0);
  CHECK(psi(4.0) == doctest::Approx(2.0));
  CHECK(std::isinf(psi.support_hi()));
}

TEST_CASE("degenerate generating function") {
  const PsiFunction psi = PsiFunction::degenerate(2.0);
  CHECK(psi(2.0) == 1.0);
  CHECK(std::isinf(psi(3.0)));
  CHECK(psi.r() == 2.0);
}

TEST_CASE("natural generating function interpolates its table") {
  const PsiFunction psi = PsiFunction::natural({{1.0, 2.0}, {3.0, 4.0}});
  CHECK(psi(2.0) == doctest::Approx(3.0));
  CHECK(psi(1.0) == doctest::Approx(2.0));
  CHECK(std::isinf(psi(3.5)));
}

TEST_CASE("weight functions") {
  const WeightFunction w = WeightFunction::power(2.0);
  CHECK(w(3.0) == doctest::Approx(9.0));
  CHECK_THROWS_AS(WeightFunction::power(0.0), std::invalid_argument);
  const WeightFunction tab = WeightFunction::tabulated({{1.0, 1.0}, {2.0, 4.0}});
  CHECK(tab(1.5) == doctest::Approx(2.5));
}
