#pragma once

#include <optional>
#include <span>
#include <string>

#include "ritails/convex.hpp"
#include "ritails/functions.hpp"
#include "ritails/rv.hpp"
#include "ritails/tail.hpp"

namespace ritails {

enum class MeasureKind { Probabilistic, SigmaFiniteInfinite };

enum class Family { Lp, Linf, Lorentz, Orlicz, Gls };

/// One space from the catalog, with its parameters and measure model.
class SpaceDescriptor {
 public:
  static SpaceDescriptor lp(double p,
                            MeasureKind measure = MeasureKind::Probabilistic);
  static SpaceDescriptor linf(MeasureKind measure = MeasureKind::Probabilistic);
  static SpaceDescriptor lorentz(WeightFunction w);
  static SpaceDescriptor orlicz(YoungFunction N);
  static SpaceDescriptor gls(PsiFunction psi);

  Family family() const { return family_; }
  MeasureKind measure() const { return measure_; }
  double p() const { return p_; }
  const WeightFunction& weight() const { return *w_; }
  const YoungFunction& young() const { return *N_; }
  const PsiFunction& psi() const { return *psi_; }

  double total_mass() const {
    return measure_ == MeasureKind::Probabilistic ? 1.0 : kInf;
  }

  std::string label() const;

 private:
  SpaceDescriptor() = default;

  Family family_ = Family::Lp;
  MeasureKind measure_ = MeasureKind::Probabilistic;
  double p_ = 0.0;
  std::optional<WeightFunction> w_;
  std::optional<YoungFunction> N_;
  std::optional<PsiFunction> psi_;
};

/// Parses the mini-grammar family ":" key "=" value {"," key "=" value}.
/// Families: lp, linf, lorentz, orlicz, gls; measure=prob|infinite.
SpaceDescriptor parse_space_spec(const std::string& text);

/// |xi|_p: exact summation for discrete, adaptive quadrature for the
/// power-singularity family. +infinity when the moment diverges.
double lp_moment_norm(double p, const RandomVariable& rv);

/// Norm of rv in the given space. An infinite value is reported as
/// +infinity, not an error.
double norm(const SpaceDescriptor& space, const RandomVariable& rv);

/// Closed-form (or optimization-bound, for GLS) Tchebychev characteristic.
TailFunction characteristic(const SpaceDescriptor& space);

/// delta -> phi_F(delta).
ScalarFn fundamental(const SpaceDescriptor& space);

/// Moment profile psi(p) = |xi|_p on the grid; the support is truncated
/// to the longest prefix of finite moments.
PsiFunction natural_psi(const RandomVariable& rv, std::span<const double> p_grid);

/// Numerical Young-Fenchel conjugate; N must be convex on the probe range.
YoungFunction conjugate_young(const YoungFunction& N);

}  // namespace ritails
