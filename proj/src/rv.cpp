#include "ritails/rv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ritails {

DiscreteRV::DiscreteRV(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("DiscreteRV: no atoms");
  }
  double total = 0.0;
  for (const Atom& a : atoms_) {
    if (!(a.value >= 0.0) || !std::isfinite(a.value)) {
      throw std::invalid_argument("DiscreteRV: atom value must be >= 0");
    }
    if (!(a.prob > 0.0)) {
      throw std::invalid_argument("DiscreteRV: atom probability must be > 0");
    }
    total += a.prob;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteRV: probabilities must sum to 1");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i].value == atoms_[i - 1].value) {
      throw std::invalid_argument("DiscreteRV: atom values must be distinct");
    }
  }
}

DiscreteRV DiscreteRV::scaled(double c) const {
  if (!(c > 0.0)) {
    throw std::domain_error("DiscreteRV::scaled: c must be > 0");
  }
  std::vector<Atom> out = atoms_;
  for (Atom& a : out) a.value *= c;
  return DiscreteRV(std::move(out));
}

AnalyticRV::AnalyticRV(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("AnalyticRV: alpha must lie in (0,1)");
  }
}

double AnalyticRV::eval(double omega) const {
  return std::pow(omega, -alpha_);
}

DiscreteRV two_point_rv(double value, double prob) {
  if (!(prob > 0.0) || !(prob < 1.0)) {
    throw std::invalid_argument("two_point_rv: prob must lie in (0,1)");
  }
  return DiscreteRV({{0.0, 1.0 - prob}, {value, prob}});
}

DiscreteRV constant_rv(double c) { return DiscreteRV({{c, 1.0}}); }

}  // namespace ritails
