#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ritails/diagnostics.hpp"
#include "ritails/space.hpp"

namespace ritails {

struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed;
  std::string generator_label;
};

/// Inverse-transform sampling, deterministic in (rv, n, seed). Values
/// are generated in fixed-size chunks whose substreams derive from
/// (seed, chunkIndex), so the batch does not depend on how chunks are
/// scheduled.
SampleBatch sample(const RandomVariable& rv, std::size_t n,
                   std::uint64_t seed);

struct TailEstimate {
  double estimate;
  double half_width;  // 3-sigma binomial band
};

TailEstimate empirical_tail(const SampleBatch& batch, double t);

/// Checks the norm-membership tail bound: the empirical tail at every
/// grid t must not exceed T^{(F)}(t / ||rv||) plus the binomial band.
/// Grid points where the bound is below 1e-4 are skipped (the band is
/// uninformative there at desk-scale n).
DiagnosticsReport verify_tail_bound(const SpaceDescriptor& space,
                                    const RandomVariable& rv,
                                    std::span<const double> t_grid,
                                    std::size_t n, std::uint64_t seed);

struct CiRequest {
  double sigma;
  double wn;
  double alpha;
  SpaceDescriptor space;
};

/// Radius u / wn with u = sigma * leftInverse(T^{(F)}, alpha); the
/// interval estimate +- radius then has coverage >= 1 - alpha under the
/// norm bound sigma.
double confidence_interval(const CiRequest& req);

}  // namespace ritails
