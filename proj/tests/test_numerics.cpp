#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ritails/grids.hpp"
#include "ritails/numerics.hpp"

using namespace ritails;

TEST_CASE("solve_nonincreasing finds the crossing") {
  const auto f = [](double t) { return 1.0 / t; };
  CHECK(solve_nonincreasing(f, 0.1, 1e-6, 1e6) == doctest::Approx(10.0).epsilon(1e-10));
  CHECK(solve_nonincreasing(f, 2.0, 0.25, 1e6) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("solve_nonincreasing rejects unattained levels") {
  const auto f = [](double t) { return 1.0 / t; };
  CHECK_THROWS_AS(solve_nonincreasing(f, 1e-9, 1.0, 10.0), std::range_error);
}

TEST_CASE("invert_increasing doubles the bracket as needed") {
  const auto g = [](double s) { return s * s; };
  CHECK(invert_increasing(g, 100.0, 1e-3, 2e-3, 1e12) ==
        doctest::Approx(10.0).epsilon(1e-10));
  CHECK_THROWS_AS(invert_increasing(g, 1e30, 1.0, 2.0, 1e6), std::range_error);
}

TEST_CASE("golden section locates extrema") {
  const auto f = [](double x) { return (x - 3.0) * (x - 3.0); };
  const auto mn = golden_min(f, 0.0, 10.0);
  CHECK(mn.x == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(mn.value == doctest::Approx(0.0).epsilon(1e-8));
  const auto mx = golden_max([](double x) { return std::sin(x); }, 0.0, 3.141592653589793);
  CHECK(mx.x == doctest::Approx(1.5707963267948966).epsilon(1e-8));
  CHECK(mx.value == doctest::Approx(1.0));
}

TEST_CASE("adaptive simpson integrates smooth functions") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0,
                         3.141592653589793) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("grid parsing") {
  const GridSpec g = parse_grid("2:1e6:200");
  CHECK(g.lo == 2.0);
  CHECK(g.hi == 1e6);
  CHECK(g.points == 200);
  CHECK(g.log_spacing);

  const GridSpec lin = parse_grid("0.5:1:11:lin");
  CHECK_FALSE(lin.log_spacing);
  const auto pts = make_grid(lin);
  REQUIRE(pts.size() == 11);
  CHECK(pts[5] == doctest::Approx(0.75));

  CHECK_THROWS_AS(parse_grid("2:1e6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("5:2:10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("2:10:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:10:5"), std::invalid_argument);  // log needs lo > 0
}

TEST_CASE("log grid endpoints and spacing") {
  const auto g = log_grid(2.0, 8.0, 3);
  REQUIRE(g.size() == 3);
  CHECK(g.front() == doctest::Approx(2.0));
  CHECK(g[1] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(g.back() == doctest::Approx(8.0));
}
