#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ritails/diagnostics.hpp"
#include "ritails/grids.hpp"

using namespace ritails;

TEST_CASE("regularity: Lp and Orlicz are exact") {
  const auto grid = log_grid(2.0, 1e6, 100);
  const auto lp = regularity_report(SpaceDescriptor::lp(2.0), grid);
  CHECK(lp.verdict == Verdict::Exact);
  const auto orl = regularity_report(
      SpaceDescriptor::orlicz(YoungFunction::power(3.0)), grid);
  CHECK(orl.verdict == Verdict::Exact);
}

TEST_CASE("regularity: grid-blowup GLS is unbounded") {
  const auto grid = log_grid(2.0, 1e6, 60);
  const auto rep = regularity_report(
      SpaceDescriptor::gls(PsiFunction::grid_blowup(2.0, 1.0)), grid);
  CHECK(rep.verdict == Verdict::Unbounded);
  REQUIRE(rep.c1.has_value());
  REQUIRE(rep.c2.has_value());
  CHECK(*rep.c2 >= 5.0 * *rep.c1);
}

TEST_CASE("associate products for conjugate Lp pairs are exact") {
  const auto grid = log_grid(2.0, 1e4, 40);
  const auto rep =
      associate_product(SpaceDescriptor::lp(2.0), SpaceDescriptor::lp(2.0), grid);
  CHECK(rep.verdict == Verdict::Exact);
  const auto rep31 = associate_product(SpaceDescriptor::lp(3.0),
                                       SpaceDescriptor::lp(1.5), grid);
  CHECK(rep31.verdict == Verdict::Exact);
  const auto rep1inf =
      associate_product(SpaceDescriptor::lp(1.0), SpaceDescriptor::linf(), grid);
  CHECK(rep1inf.verdict != Verdict::Violated);
}

TEST_CASE("associate rejects non-conjugate pairs") {
  const auto grid = log_grid(2.0, 100.0, 10);
  CHECK_THROWS_AS(
      associate_product(SpaceDescriptor::lp(2.0), SpaceDescriptor::lp(3.0), grid),
      std::invalid_argument);
}

TEST_CASE("associate products for a conjugate Orlicz pair stay in [t, 2t]") {
  const YoungFunction N = YoungFunction::power(2.0);
  const YoungFunction Nc =
      YoungFunction::custom([](double v) { return v * v / 4.0; }, "vsq/4");
  const auto grid = log_grid(2.0, 1e4, 40);
  const auto rep = associate_product(SpaceDescriptor::orlicz(N),
                                     SpaceDescriptor::orlicz(Nc), grid);
  CHECK(rep.verdict == Verdict::BoundedRatio);
  REQUIRE(rep.c1.has_value());
  REQUIRE(rep.c2.has_value());
  CHECK(*rep.c1 >= 1.0 - 1e-9);
  CHECK(*rep.c2 <= 2.0 + 1e-6);
}

TEST_CASE("resonant bound for decaying characteristics") {
  const auto grid = log_grid(2.0, 1e4, 60);
  const auto rep = resonant_bound(SpaceDescriptor::lp(2.0), grid);
  CHECK(rep.verdict == Verdict::BoundedRatio);
  REQUIRE(rep.C.has_value());
  CHECK(*rep.C == doctest::Approx(0.5).epsilon(1e-9));  // max of t^{-1} at t = 2
}

TEST_CASE("resonant bound flags a growing t * T(t)") {
  const auto grid = log_grid(2.0, 1e4, 60);
  const auto rep = resonant_bound(
      SpaceDescriptor::lorentz(WeightFunction::power(0.5)), grid);
  CHECK(rep.verdict == Verdict::Violated);
}

TEST_CASE("direct-sum sandwich holds and reports an equivalence witness") {
  const auto grid = log_grid(2.0, 1e6, 200);
  const auto TF = characteristic(SpaceDescriptor::orlicz(YoungFunction::power(2.0)));
  const auto TG = characteristic(SpaceDescriptor::orlicz(YoungFunction::power(3.0)));
  const auto rep = sum_characteristic_bounds(TF, TG, grid);
  CHECK(rep.verdict == Verdict::BoundedRatio);
  CHECK(rep.c1.has_value());
  CHECK(rep.c2.has_value());
  for (const ReportRow& r : rep.rows) {
    CHECK(r.lhs <= r.rhs + 1e-12);
  }
}

TEST_CASE("direct-sum rejects mismatched measures") {
  const auto grid = log_grid(2.0, 100.0, 10);
  const auto TP = characteristic(SpaceDescriptor::lp(2.0));
  const auto TI = characteristic(
      SpaceDescriptor::lp(2.0, MeasureKind::SigmaFiniteInfinite));
  CHECK_THROWS_AS(sum_characteristic_bounds(TP, TI, grid), std::domain_error);
}

TEST_CASE("report serialization") {
  DiagnosticsReport rep;
  rep.subject = "demo";
  rep.rows.push_back({2.0, 0.25, 0.5, 0.5});
  rep.verdict = Verdict::Exact;
  rep.C = 1.5;
  const auto j = rep.to_json();
  CHECK(j["verdict"] == "exact");
  CHECK(j["C"] == 1.5);
  CHECK(j["rows"].size() == 1);
  const std::string csv = rep.to_csv();
  CHECK(csv.find("t,lhs,rhs,ratio") == 0);
  CHECK(csv.find("0.25") != std::string::npos);
}
