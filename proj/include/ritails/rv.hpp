#pragma once

#include <variant>
#include <vector>

namespace ritails {

struct Atom {
  double value;
  double prob;
};

/// Finitely supported random variable with nonnegative atom values.
/// Probabilities must be positive and sum to 1 within 1e-12; values
/// must be distinct. Atoms are kept sorted by value.
class DiscreteRV {
 public:
  explicit DiscreteRV(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Scales every atom value by c > 0.
  DiscreteRV scaled(double c) const;

 private:
  std::vector<Atom> atoms_;
};

/// omega -> omega^{-alpha} on (0,1) with Lebesgue measure, 0 < alpha < 1.
class AnalyticRV {
 public:
  explicit AnalyticRV(double alpha);

  double alpha() const { return alpha_; }
  double eval(double omega) const;

 private:
  double alpha_;
};

using RandomVariable = std::variant<DiscreteRV, AnalyticRV>;

/// Convenience: P(xi = v) = prob, P(xi = 0) = 1 - prob.
DiscreteRV two_point_rv(double value, double prob);

/// Degenerate rv xi == c.
DiscreteRV constant_rv(double c);

}  // namespace ritails
