#include "ritails/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ritails {

namespace {

constexpr std::size_t kChunk = 65536;

struct SplitMix64 {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk) {
  SplitMix64 mix{seed ^ (0x9e3779b97f4a7c15ULL * (chunk + 1))};
  mix.next();
  return mix.next();
}

double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

SampleBatch sample(const RandomVariable& rv, std::size_t n,
                   std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("sample: n must be >= 1");
  }
  SampleBatch batch;
  batch.seed = seed;
  batch.generator_label = "splitmix64-chunk65536";
  batch.values.resize(n);

  std::vector<double> cum;
  const DiscreteRV* d = std::get_if<DiscreteRV>(&rv);
  if (d) {
    double acc = 0.0;
    for (const Atom& a : d->atoms()) {
      acc += a.prob;
      cum.push_back(acc);
    }
    cum.back() = 1.0;
  }
  const AnalyticRV* an = std::get_if<AnalyticRV>(&rv);

  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  for (std::size_t c = 0; c < chunks; ++c) {
    SplitMix64 rng{substream_seed(seed, c)};
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(lo + kChunk, n);
    for (std::size_t i = lo; i < hi; ++i) {
      const double u = to_unit(rng.next());
      if (d) {
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const std::size_t idx = std::min(
            static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
        batch.values[i] = d->atoms()[idx].value;
      } else {
        batch.values[i] = std::pow(1.0 - u, -an->alpha());  // omega in (0,1]
      }
    }
  }
  return batch;
}

TailEstimate empirical_tail(const SampleBatch& batch, double t) {
  if (batch.values.empty()) {
    throw std::invalid_argument("empirical_tail: empty batch");
  }
  const auto n = static_cast<double>(batch.values.size());
  const double hits = static_cast<double>(std::count_if(
      batch.values.begin(), batch.values.end(),
      [t](double v) { return v >= t; }));
  const double p = hits / n;
  return {p, 3.0 * std::sqrt(p * (1.0 - p) / n)};
}

DiagnosticsReport verify_tail_bound(const SpaceDescriptor& space,
                                    const RandomVariable& rv,
                                    std::span<const double> t_grid,
                                    std::size_t n, std::uint64_t seed) {
  const double c = norm(space, rv);
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw std::invalid_argument("verify_tail_bound: norm must be finite positive");
  }
  const TailFunction T = characteristic(space);
  SampleBatch batch = sample(rv, n, seed);
  std::vector<double> sorted = batch.values;
  std::sort(sorted.begin(), sorted.end());
  const auto nn = static_cast<double>(sorted.size());

  DiagnosticsReport rep;
  rep.subject = "tail bound " + space.label();
  bool violated = false;
  for (double t : t_grid) {
    const double bound = T(t / c);
    if (bound < 1e-4) continue;
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
    const double est = static_cast<double>(sorted.end() - it) / nn;
    const double hw = 3.0 * std::sqrt(est * (1.0 - est) / nn);
    rep.rows.push_back({t, est, bound + hw, (bound + hw) > 0.0
                                                ? est / (bound + hw)
                                                : 0.0});
    if (est > bound + hw + 1e-12) violated = true;
  }
  rep.verdict = violated ? Verdict::Violated : Verdict::BoundedRatio;
  std::ostringstream oss;
  oss << "norm=" << c << " n=" << n << " seed=" << seed << " generator="
      << batch.generator_label;
  rep.notes = oss.str();
  return rep;
}

double confidence_interval(const CiRequest& req) {
  if (!(req.sigma > 0.0) || !(req.wn > 0.0)) {
    throw std::invalid_argument("confidence_interval: sigma, wn must be > 0");
  }
  if (!(req.alpha > 0.0) || !(req.alpha < 1.0)) {
    throw std::invalid_argument("confidence_interval: alpha must lie in (0,1)");
  }
  const TailFunction T = characteristic(req.space);
  const double u = req.sigma * left_inverse(T, req.alpha);
  return u / req.wn;
}

}  // namespace ritails
