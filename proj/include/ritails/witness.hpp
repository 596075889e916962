#pragma once

#include <string>

#include "ritails/space.hpp"

namespace ritails {

/// Two-point random variable saturating a characteristic, with the
/// evidence: its norm (must be 1) and its tail at t versus the
/// closed-form characteristic value.
struct WitnessReport {
  DiscreteRV rv;
  std::string family;
  double t;
  double norm_value;
  double tail_at_t;
  double characteristic_at_t;
  bool saturated;
};

/// P(xi = t) = t^{-p}, P(xi = 0) = 1 - t^{-p}; requires t > 1.
WitnessReport lp_witness(double p, double t);

/// P(xi0 = t) = 1/N(t) = 1 - P(xi0 = 0); requires N(t) > 1.
WitnessReport orlicz_witness(const YoungFunction& N, double t);

/// P(xi = t) = 1/w(t); requires w(t) > 1.
WitnessReport lorentz_witness(const WeightFunction& w, double t);

/// Recomputes norm and characteristic through the space catalog and
/// confirms the report invariants; throws on a family mismatch.
bool verify_saturation(const SpaceDescriptor& space,
                       const WitnessReport& report);

}  // namespace ritails
