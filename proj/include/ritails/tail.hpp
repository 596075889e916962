#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ritails/numerics.hpp"
#include "ritails/rv.hpp"

namespace ritails {

inline constexpr double kDefaultT0 = 2.0;

enum class Provenance { ClosedForm, OptimizationBound, Tabulated, Composed };

std::string to_string(Provenance p);

/// Evaluable nonincreasing map t -> measure of exceedance, clamped to
/// [0, totalMass]. Evaluation at t <= 0 returns the total mass (the
/// limit convention needed by the vee operation at split endpoints).
class TailFunction {
 public:
  TailFunction(ScalarFn eval, double total_mass, double t0, Provenance prov);

  static TailFunction closed_form(ScalarFn eval, double total_mass = 1.0,
                                  double t0 = kDefaultT0);

  /// Log-linear interpolation between (t, value) samples; beyond the
  /// last sample the last value extends flat.
  static TailFunction tabulated(std::vector<std::pair<double, double>> samples,
                                double total_mass = 1.0,
                                double t0 = kDefaultT0);

  double operator()(double t) const;

  double total_mass() const { return total_mass_; }
  double t0() const { return t0_; }
  Provenance provenance() const { return provenance_; }

 private:
  ScalarFn eval_;
  double total_mass_;
  double t0_;
  Provenance provenance_;
};

struct EquivalenceWitness {
  double t0;
  double c1;
  double c2;
};

/// Exact exceedance function of |xi|; mass at an atom v counts toward
/// eval(t) for all t <= v.
TailFunction tail_of_rv(const RandomVariable& rv);

/// t -> T(t/c); the validity threshold scales along.
TailFunction dilate(const TailFunction& T, double c);

/// Searches for (t0, C1) with T1(t) <= T2(t/C1) at every grid point
/// >= t0, C1 in [2^-20, 2^20]. The witness constant must be stable:
/// a constant that keeps drifting as the grid extends means the order
/// fails asymptotically and absent is returned. c2 mirrors c1.
std::optional<EquivalenceWitness> order_check(const TailFunction& T1,
                                              const TailFunction& T2,
                                              std::span<const double> grid);

/// Both directions of order_check; the returned constants bracket T1
/// between dilations of T2 on the grid beyond t0.
std::optional<EquivalenceWitness> equivalence_check(
    const TailFunction& T1, const TailFunction& T2,
    std::span<const double> grid);

/// (T1 v T2)(t) = inf_{x in [0,1]} [T1(t x) + T2(t (1-x))], computed by
/// a 256-point grid over x followed by golden-section refinement.
TailFunction vee(const TailFunction& T1, const TailFunction& T2);

/// Smallest t in [t_lo, t_hi] with T(t) <= level (relative tol 1e-12).
double left_inverse(const TailFunction& T, double level, double t_lo = 1e-9,
                    double t_hi = 1e12);

}  // namespace ritails
