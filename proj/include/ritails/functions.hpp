#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ritails/numerics.hpp"

namespace ritails {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Young function: convex increasing, N(0) = 0, N(u) -> infinity.
/// Forms: power u^p, powerLog |u|^p log^q(e+|u|), or an opaque custom
/// evaluator (used for pointwise maxima and numeric conjugates).
class YoungFunction {
 public:
  enum class Form { Power, PowerLog, Custom };

  static YoungFunction power(double p);
  static YoungFunction power_log(double p, double q);
  static YoungFunction custom(ScalarFn eval, std::string label = "custom");

  double operator()(double u) const { return eval_(u); }

  Form form() const { return form_; }
  double p() const { return p_; }
  double q() const { return q_; }
  const std::string& label() const { return label_; }

  /// N^{-1}(y) by bisection to relative tolerance 1e-12.
  double inverse(double y) const;

  /// Numeric check that N is strictly increasing on a test grid.
  bool strictly_increasing() const;

 private:
  YoungFunction(Form form, double p, double q, ScalarFn eval,
                std::string label);

  Form form_;
  double p_ = 0.0;
  double q_ = 0.0;
  ScalarFn eval_;
  std::string label_;
};

/// Pointwise maximum of two Young functions (lazy evaluation).
YoungFunction young_max(const YoungFunction& a, const YoungFunction& b);

/// Generating function of a Grand Lebesgue space: psi(p) on a support
/// interval, +infinity outside.
class PsiFunction {
 public:
  enum class Form { GridBlowup, PowerRoot, Natural, Degenerate };

  /// psi(p) = (B - p)^{-beta} on [1, B).
  static PsiFunction grid_blowup(double B, double beta);
  /// psi(p) = p^{1/m} on [1, infinity).
  static PsiFunction power_root(double m);
  /// Tabulated moment profile; linear interpolation between samples.
  static PsiFunction natural(std::vector<std::pair<double, double>> table);
  /// psi_r(p) = 1 at p = r, infinity elsewhere.
  static PsiFunction degenerate(double r);

  double operator()(double p) const;

  Form form() const { return form_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }  // may be +infinity
  double B() const { return B_; }
  double beta() const { return beta_; }
  double m() const { return m_; }
  double r() const { return r_; }
  std::string label() const;

 private:
  PsiFunction() = default;

  Form form_ = Form::GridBlowup;
  double lo_ = 1.0;
  double hi_ = kInf;
  double B_ = 0.0;
  double beta_ = 0.0;
  double m_ = 0.0;
  double r_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

/// Lorentz weight: positive, continuous, strictly increasing, unbounded.
class WeightFunction {
 public:
  enum class Form { Power, Tabulated };

  /// w(t) = t^p, p > 0.
  static WeightFunction power(double p);
  static WeightFunction tabulated(std::vector<std::pair<double, double>> table);

  double operator()(double t) const;

  Form form() const { return form_; }
  double p() const { return p_; }
  std::string label() const;

 private:
  WeightFunction() = default;

  Form form_ = Form::Power;
  double p_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

}  // namespace ritails
