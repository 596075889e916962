#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ritails/grids.hpp"
#include "ritails/tail.hpp"

using namespace ritails;

TEST_CASE("discrete rv validation") {
  CHECK_THROWS_AS(DiscreteRV({{1.0, 0.5}, {2.0, 0.4}}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteRV({{-1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteRV({{1.0, 0.5}, {1.0, 0.5}}), std::invalid_argument);
  const DiscreteRV rv({{2.0, 0.25}, {1.0, 0.75}});
  CHECK(rv.atoms().front().value == 1.0);  // kept sorted
  const DiscreteRV s = rv.scaled(2.0);
  CHECK(s.atoms().back().value == 4.0);
}

TEST_CASE("tail of a two-point rv uses the >= convention") {
  const TailFunction T = tail_of_rv(two_point_rv(10.0, 0.01));
  CHECK(T(0.0) == 1.0);
  CHECK(T(0.5) == doctest::Approx(0.01));
  CHECK(T(10.0) == doctest::Approx(0.01));  // atom counts at its own value
  CHECK(T(10.0 + 1e-9) == 0.0);
  CHECK(T(-3.0) == 1.0);
}

TEST_CASE("tail of the power singularity") {
  const TailFunction T = tail_of_rv(AnalyticRV(0.5));
  CHECK(T(0.5) == 1.0);
  CHECK(T(10.0) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(T(100.0) == doctest::Approx(1e-4).epsilon(1e-12));
}

TEST_CASE("analytic rv rejects alpha outside (0,1)") {
  CHECK_THROWS_AS(AnalyticRV(0.0), std::invalid_argument);
  CHECK_THROWS_AS(AnalyticRV(1.0), std::invalid_argument);
}

TEST_CASE("dilate rescales the argument") {
  const TailFunction T = tail_of_rv(AnalyticRV(0.5));
  const TailFunction D = dilate(T, 2.0);
  CHECK(D(20.0) == doctest::Approx(T(10.0)));
  CHECK(D.t0() == doctest::Approx(2.0 * T.t0()));
  CHECK_THROWS_AS(dilate(T, 0.0), std::domain_error);
}

TEST_CASE("tabulated tails interpolate log-linearly") {
  const TailFunction T = TailFunction::tabulated({{1.0, 1.0}, {100.0, 0.01}});
  CHECK(T(10.0) == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(T(1000.0) == doctest::Approx(0.01));  // flat extension
}

TEST_CASE("order check produces a witness when the order holds") {
  const auto grid = log_grid(2.0, 1e6, 64);
  const TailFunction T1 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t)); });
  const TailFunction T2 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / t); });
  const auto w = order_check(T1, T2, grid);
  REQUIRE(w.has_value());
  CHECK(w->c1 <= 1.0 + 1e-9);
}

TEST_CASE("order check reports absent for a drifting constant") {
  const auto grid = log_grid(2.0, 1e6, 64);
  const TailFunction T1 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / t); });
  const TailFunction T2 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t)); });
  CHECK_FALSE(order_check(T1, T2, grid).has_value());
}

TEST_CASE("equivalence check on identical tails gives constants near 1") {
  const auto grid = log_grid(2.0, 1e4, 50);
  const TailFunction T =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t)); });
  const auto w = equivalence_check(T, T, grid);
  REQUIRE(w.has_value());
  CHECK(w->c1 == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(w->c2 == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("vee of two copies of min(1, 1/t)") {
  const TailFunction T =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / t); });
  const TailFunction V = vee(T, T);
  // the balanced split x = 1/2 is optimal: 1/(4) + 1/(4)
  CHECK(V(8.0) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(V.provenance() == Provenance::Composed);
}

TEST_CASE("vee dominates the pointwise max") {
  const TailFunction T1 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t)); });
  const TailFunction T2 = TailFunction::closed_form(
      [](double t) { return std::min(1.0, std::exp(1.0 - t)); });
  const TailFunction V = vee(T1, T2);
  for (double t : log_grid(2.0, 1e4, 40)) {
    CHECK(V(t) >= std::max(T1(t), T2(t)) - 1e-12);
  }
}

TEST_CASE("vee commutes") {
  const TailFunction T1 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t)); });
  const TailFunction T2 =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t * t)); });
  const TailFunction A = vee(T1, T2);
  const TailFunction B = vee(T2, T1);
  for (double t : log_grid(2.0, 1e4, 30)) {
    CHECK(A(t) == doctest::Approx(B(t)).epsilon(1e-9));
  }
}

TEST_CASE("vee rejects mismatched total mass") {
  const TailFunction P =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / t); }, 1.0);
  const TailFunction I = TailFunction::closed_form(
      [](double t) { return 1.0 / t; }, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(vee(P, I), std::domain_error);
}

TEST_CASE("left inverse of a power tail") {
  const TailFunction T =
      TailFunction::closed_form([](double t) { return std::min(1.0, 1.0 / (t * t)); });
  CHECK(left_inverse(T, 0.01) == doctest::Approx(10.0).epsilon(1e-10));
  CHECK(left_inverse(T, 1e-4) == doctest::Approx(100.0).epsilon(1e-10));
}
