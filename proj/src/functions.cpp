#include "ritails/functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ritails {

YoungFunction::YoungFunction(Form form, double p, double q, ScalarFn eval,
                             std::string label)
    : form_(form),
      p_(p),
      q_(q),
      eval_(std::move(eval)),
      label_(std::move(label)) {}

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("YoungFunction::power: p must be >= 1");
  }
  std::ostringstream oss;
  oss << "u^" << p;
  return YoungFunction(
      Form::Power, p, 0.0,
      [p](double u) { return std::pow(std::fabs(u), p); }, oss.str());
}

YoungFunction YoungFunction::power_log(double p, double q) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("YoungFunction::power_log: p must be >= 1");
  }
  // q < 0 with p = 1 is not increasing near 0; checked numerically below.
  auto eval = [p, q](double u) {
    const double a = std::fabs(u);
    return std::pow(a, p) * std::pow(std::log(std::exp(1.0) + a), q);
  };
  std::ostringstream oss;
  oss << "u^" << p << "*log^" << q << "(e+u)";
  YoungFunction N(Form::PowerLog, p, q, eval, oss.str());
  if (!N.strictly_increasing()) {
    throw std::invalid_argument(
        "YoungFunction::power_log: (p,q) not increasing near 0");
  }
  return N;
}

YoungFunction YoungFunction::custom(ScalarFn eval, std::string label) {
  if (std::fabs(eval(0.0)) > 1e-9) {
    throw std::invalid_argument("YoungFunction::custom: N(0) must be 0");
  }
  return YoungFunction(Form::Custom, 0.0, 0.0, std::move(eval),
                       std::move(label));
}

double YoungFunction::inverse(double y) const {
  if (!(y > 0.0)) return 0.0;
  return invert_increasing([this](double u) { return eval_(u); }, y, 1e-300,
                           1.0, 1e300, 1e-12);
}

bool YoungFunction::strictly_increasing() const {
  double prev = eval_(1e-9);
  for (int i = 1; i <= 400; ++i) {
    const double u = std::pow(10.0, -9.0 + 15.0 * i / 400.0);  // up to 1e6
    const double v = eval_(u);
    if (!(v > prev)) return false;
    prev = v;
  }
  return true;
}

YoungFunction young_max(const YoungFunction& a, const YoungFunction& b) {
  return YoungFunction::custom(
      [a, b](double u) { return std::max(a(u), b(u)); },
      "max(" + a.label() + "," + b.label() + ")");
}

PsiFunction PsiFunction::grid_blowup(double B, double beta) {
  if (!(B > 1.0)) {
    throw std::invalid_argument("PsiFunction::grid_blowup: B must be > 1");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("PsiFunction::grid_blowup: beta must be > 0");
  }
  PsiFunction psi;
  psi.form_ = Form::GridBlowup;
  psi.lo_ = 1.0;
  psi.hi_ = B;
  psi.B_ = B;
  psi.beta_ = beta;
  return psi;
}

PsiFunction PsiFunction::power_root(double m) {
  if (!(m > 0.0)) {
    throw std::invalid_argument("PsiFunction::power_root: m must be > 0");
  }
  PsiFunction psi;
  psi.form_ = Form::PowerRoot;
  psi.lo_ = 1.0;
  psi.hi_ = kInf;
  psi.m_ = m;
  return psi;
}

PsiFunction PsiFunction::natural(
    std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) {
    throw std::invalid_argument("PsiFunction::natural: need >= 2 samples");
  }
  std::sort(table.begin(), table.end());
  for (const auto& [p, v] : table) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("PsiFunction::natural: values must be finite positive");
    }
  }
  PsiFunction psi;
  psi.form_ = Form::Natural;
  psi.lo_ = table.front().first;
  psi.hi_ = table.back().first;
  psi.table_ = std::move(table);
  return psi;
}

PsiFunction PsiFunction::degenerate(double r) {
  if (!(r >= 1.0)) {
    throw std::invalid_argument("PsiFunction::degenerate: r must be >= 1");
  }
  PsiFunction psi;
  psi.form_ = Form::Degenerate;
  psi.lo_ = r;
  psi.hi_ = r;
  psi.r_ = r;
  return psi;
}

double PsiFunction::operator()(double p) const {
  switch (form_) {
    case Form::GridBlowup:
      if (p < lo_ || p >= hi_) return kInf;
      return std::pow(B_ - p, -beta_);
    case Form::PowerRoot:
      if (p < lo_) return kInf;
      return std::pow(p, 1.0 / m_);
    case Form::Degenerate:
      return p == r_ ? 1.0 : kInf;
    case Form::Natural: {
      if (p < lo_ || p > hi_) return kInf;
      auto it = std::lower_bound(
          table_.begin(), table_.end(), p,
          [](const std::pair<double, double>& s, double x) {
            return s.first < x;
          });
      if (it == table_.begin()) return it->second;
      const auto [p1, v1] = *it;
      const auto [p0, v0] = *(it - 1);
      if (p1 == p0) return v1;
      const double w = (p - p0) / (p1 - p0);
      return (1.0 - w) * v0 + w * v1;
    }
  }
  return kInf;
}

std::string PsiFunction::label() const {
  std::ostringstream oss;
  switch (form_) {
    case Form::GridBlowup:
      oss << "psi{B=" << B_ << ",beta=" << beta_ << "}";
      break;
    case Form::PowerRoot:
      oss << "psi{m=" << m_ << "}";
      break;
    case Form::Degenerate:
      oss << "psi{r=" << r_ << "}";
      break;
    case Form::Natural:
      oss << "psi{natural," << lo_ << ".." << hi_ << "}";
      break;
  }
  return oss.str();
}

WeightFunction WeightFunction::power(double p) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("WeightFunction::power: p must be > 0");
  }
  WeightFunction w;
  w.form_ = Form::Power;
  w.p_ = p;
  return w;
}

WeightFunction WeightFunction::tabulated(
    std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) {
    throw std::invalid_argument("WeightFunction::tabulated: need >= 2 samples");
  }
  std::sort(table.begin(), table.end());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!(table[i].second > 0.0)) {
      throw std::invalid_argument("WeightFunction: values must be positive");
    }
    if (i > 0 && !(table[i].second > table[i - 1].second)) {
      throw std::invalid_argument("WeightFunction: must be strictly increasing");
    }
  }
  WeightFunction w;
  w.form_ = Form::Tabulated;
  w.table_ = std::move(table);
  return w;
}

double WeightFunction::operator()(double t) const {
  if (form_ == Form::Power) return std::pow(t, p_);
  if (t <= table_.front().first) return table_.front().second;
  if (t >= table_.back().first) {
    // extend by the last slope so w(t) -> infinity
    const auto& [ta, va] = table_[table_.size() - 2];
    const auto& [tb, vb] = table_.back();
    return vb + (vb - va) / (tb - ta) * (t - tb);
  }
  auto it = std::lower_bound(
      table_.begin(), table_.end(), t,
      [](const std::pair<double, double>& s, double x) { return s.first < x; });
  const auto [t1, v1] = *it;
  const auto [t0, v0] = *(it - 1);
  const double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * v0 + w * v1;
}

std::string WeightFunction::label() const {
  std::ostringstream oss;
  if (form_ == Form::Power) {
    oss << "t^" << p_;
  } else {
    oss << "w{tabulated}";
  }
  return oss.str();
}

}  // namespace ritails
