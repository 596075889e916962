#include <doctest.h>

#include <stdexcept>

#include "ritails/witness.hpp"

using namespace ritails;

TEST_CASE("lp witness saturates the characteristic") {
  const WitnessReport r = lp_witness(2.0, 10.0);
  CHECK(r.norm_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.tail_at_t == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(r.characteristic_at_t == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(r.saturated);
  CHECK(verify_saturation(SpaceDescriptor::lp(2.0), r));
  CHECK_THROWS_AS(lp_witness(2.0, 0.5), std::domain_error);
}

TEST_CASE("orlicz witness saturates the characteristic") {
  const YoungFunction N = YoungFunction::power(2.0);
  const WitnessReport r = orlicz_witness(N, 10.0);
  CHECK(r.norm_value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.tail_at_t == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(r.saturated);
  CHECK(verify_saturation(SpaceDescriptor::orlicz(N), r));
  CHECK_THROWS_AS(orlicz_witness(N, 0.5), std::domain_error);  // N(t) <= 1
}

TEST_CASE("orlicz witness with a power-log Young function") {
  const YoungFunction N = YoungFunction::power_log(2.0, 1.0);
  const WitnessReport r = orlicz_witness(N, 10.0);
  CHECK(r.norm_value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.tail_at_t == doctest::Approx(1.0 / N(10.0)).epsilon(1e-12));
  CHECK(r.saturated);
}

TEST_CASE("lorentz witness saturates the characteristic") {
  const WeightFunction w = WeightFunction::power(1.0);
  const WitnessReport r = lorentz_witness(w, 10.0);
  CHECK(r.norm_value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.tail_at_t == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(r.saturated);
  CHECK(verify_saturation(SpaceDescriptor::lorentz(w), r));
}

TEST_CASE("verify_saturation rejects a family mismatch") {
  const WitnessReport r = lp_witness(2.0, 10.0);
  CHECK_THROWS_AS(
      verify_saturation(SpaceDescriptor::orlicz(YoungFunction::power(2.0)), r),
      std::invalid_argument);
}
