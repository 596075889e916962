#include "ritails/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace ritails {

namespace {

WitnessReport build(DiscreteRV rv, std::string family, double t,
                    const SpaceDescriptor& space) {
  const double nv = norm(space, rv);
  const double tail = tail_of_rv(rv)(t);
  const double ch = characteristic(space)(t);
  const bool saturated =
      std::fabs(nv - 1.0) <= 1e-8 && std::fabs(tail - ch) <= 1e-8;
  return WitnessReport{std::move(rv), std::move(family), t,
                       nv,            tail,              ch,
                       saturated};
}

}  // namespace

WitnessReport lp_witness(double p, double t) {
  if (!(t > 1.0)) {
    throw std::domain_error("lp_witness: t must be > 1");
  }
  const double prob = std::pow(t, -p);
  return build(two_point_rv(t, prob), "lp", t, SpaceDescriptor::lp(p));
}

WitnessReport orlicz_witness(const YoungFunction& N, double t) {
  if (!(N(t) > 1.0)) {
    throw std::domain_error("orlicz_witness: need N(t) > 1");
  }
  return build(two_point_rv(t, 1.0 / N(t)), "orlicz", t,
               SpaceDescriptor::orlicz(N));
}

WitnessReport lorentz_witness(const WeightFunction& w, double t) {
  if (!(w(t) > 1.0)) {
    throw std::domain_error("lorentz_witness: need w(t) > 1");
  }
  return build(two_point_rv(t, 1.0 / w(t)), "lorentz", t,
               SpaceDescriptor::lorentz(w));
}

bool verify_saturation(const SpaceDescriptor& space,
                       const WitnessReport& report) {
  const char* expected = nullptr;
  switch (space.family()) {
    case Family::Lp:
      expected = "lp";
      break;
    case Family::Orlicz:
      expected = "orlicz";
      break;
    case Family::Lorentz:
      expected = "lorentz";
      break;
    default:
      expected = "";
      break;
  }
  if (report.family != expected) {
    throw std::invalid_argument("verify_saturation: family mismatch");
  }
  const double nv = norm(space, report.rv);
  const double tail = tail_of_rv(RandomVariable{report.rv})(report.t);
  const double ch = characteristic(space)(report.t);
  return std::fabs(nv - 1.0) <= 1e-8 && std::fabs(tail - ch) <= 1e-8;
}

}  // namespace ritails
