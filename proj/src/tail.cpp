#include "ritails/tail.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace ritails {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm:
      return "closed-form";
    case Provenance::OptimizationBound:
      return "optimization-bound";
    case Provenance::Tabulated:
      return "tabulated";
    case Provenance::Composed:
      return "composed";
  }
  return "unknown";
}

TailFunction::TailFunction(ScalarFn eval, double total_mass, double t0,
                           Provenance prov)
    : eval_(std::move(eval)),
      total_mass_(total_mass),
      t0_(t0),
      provenance_(prov) {
  if (!(total_mass_ > 0.0)) {
    throw std::invalid_argument("TailFunction: totalMass must be > 0");
  }
  if (!(t0_ > 0.0)) {
    throw std::invalid_argument("TailFunction: t0 must be > 0");
  }
}

TailFunction TailFunction::closed_form(ScalarFn eval, double total_mass,
                                       double t0) {
  return TailFunction(std::move(eval), total_mass, t0, Provenance::ClosedForm);
}

TailFunction TailFunction::tabulated(
    std::vector<std::pair<double, double>> samples, double total_mass,
    double t0) {
  if (samples.empty()) {
    throw std::invalid_argument("TailFunction::tabulated: empty table");
  }
  std::sort(samples.begin(), samples.end());
  auto table = std::make_shared<std::vector<std::pair<double, double>>>(
      std::move(samples));
  ScalarFn eval = [table, total_mass](double t) -> double {
    const auto& v = *table;
    if (t <= v.front().first) return total_mass;
    if (t >= v.back().first) return v.back().second;  // flat extension
    auto it = std::lower_bound(
        v.begin(), v.end(), t,
        [](const std::pair<double, double>& s, double x) { return s.first < x; });
    const auto [t1, y1] = *it;
    const auto [t0s, y0] = *(it - 1);
    // log-linear in t; linear fallback when a value hits zero
    if (y0 > 0.0 && y1 > 0.0) {
      const double w = (std::log(t) - std::log(t0s)) /
                       (std::log(t1) - std::log(t0s));
      return std::exp((1.0 - w) * std::log(y0) + w * std::log(y1));
    }
    const double w = (t - t0s) / (t1 - t0s);
    return (1.0 - w) * y0 + w * y1;
  };
  return TailFunction(std::move(eval), total_mass, t0, Provenance::Tabulated);
}

double TailFunction::operator()(double t) const {
  if (t <= 0.0) return total_mass_;
  const double v = eval_(t);
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, 0.0, total_mass_);
}

TailFunction tail_of_rv(const RandomVariable& rv) {
  if (const auto* d = std::get_if<DiscreteRV>(&rv)) {
    auto values = std::make_shared<std::vector<double>>();
    auto suffix = std::make_shared<std::vector<double>>();
    for (const Atom& a : d->atoms()) values->push_back(a.value);
    suffix->assign(values->size() + 1, 0.0);
    for (std::size_t i = values->size(); i-- > 0;) {
      (*suffix)[i] = (*suffix)[i + 1] + d->atoms()[i].prob;
    }
    ScalarFn eval = [values, suffix](double t) -> double {
      auto it = std::lower_bound(values->begin(), values->end(), t);
      return (*suffix)[static_cast<std::size_t>(it - values->begin())];
    };
    return TailFunction(std::move(eval), 1.0, kDefaultT0,
                        Provenance::ClosedForm);
  }
  const auto& a = std::get<AnalyticRV>(rv);
  const double inv_alpha = 1.0 / a.alpha();
  ScalarFn eval = [inv_alpha](double t) {
    return std::min(1.0, std::pow(t, -inv_alpha));
  };
  return TailFunction(std::move(eval), 1.0, kDefaultT0, Provenance::ClosedForm);
}

TailFunction dilate(const TailFunction& T, double c) {
  if (!(c > 0.0)) {
    throw std::domain_error("dilate: dilation constant must be > 0");
  }
  return TailFunction([T, c](double t) { return T(t / c); }, T.total_mass(),
                      c * T.t0(), T.provenance());
}

namespace {

constexpr double kCMin = 9.5367431640625e-07;  // 2^-20
constexpr double kCMax = 1048576.0;            // 2^20

bool order_feasible(const TailFunction& T1, const TailFunction& T2, double c,
                    std::span<const double> pts) {
  for (double t : pts) {
    const double lhs = T1(t);
    const double rhs = T2(t / c);
    if (lhs > rhs * (1.0 + 1e-9) + 1e-15) return false;
  }
  return true;
}

// Minimal C with T1(t) <= T2(t/C) on pts; feasibility is monotone in C.
std::optional<double> min_order_constant(const TailFunction& T1,
                                         const TailFunction& T2,
                                         std::span<const double> pts) {
  if (!order_feasible(T1, T2, kCMax, pts)) return std::nullopt;
  if (order_feasible(T1, T2, kCMin, pts)) return kCMin;
  double lo = kCMin, hi = kCMax;
  for (int i = 0; i < 80; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (order_feasible(T1, T2, mid, pts)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

bool reverse_feasible(const TailFunction& T1, const TailFunction& T2, double c,
                      std::span<const double> pts) {
  for (double t : pts) {
    const double lhs = T2(t / c);
    const double rhs = T1(t);
    if (lhs > rhs * (1.0 + 1e-9) + 1e-15) return false;
  }
  return true;
}

// Maximal C with T2(t/C) <= T1(t) on pts; smaller C is easier.
std::optional<double> max_reverse_constant(const TailFunction& T1,
                                           const TailFunction& T2,
                                           std::span<const double> pts) {
  if (!reverse_feasible(T1, T2, kCMin, pts)) return std::nullopt;
  if (reverse_feasible(T1, T2, kCMax, pts)) return kCMax;
  double lo = kCMin, hi = kCMax;
  for (int i = 0; i < 80; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (reverse_feasible(T1, T2, mid, pts)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// A witness constant is only accepted when it stays put as the grid is
// extended: the constant found on the lower half of the grid and on the
// full grid must agree within a factor 4, otherwise it is drifting with
// the grid extent and the relation fails asymptotically.
bool stable(double c_half, double c_full) {
  const double r = c_full / c_half;
  return r <= 4.0 && r >= 0.25;
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) {
    throw std::invalid_argument("tail grid must be nonempty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) {
      throw std::invalid_argument("tail grid points must be > 0");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("tail grid must be strictly increasing");
    }
  }
}

std::vector<std::size_t> t0_candidates(std::size_t n) {
  std::vector<std::size_t> idx = {0};
  for (std::size_t k : {std::size_t{1}, std::size_t{2}, n / 8, n / 4, n / 2}) {
    if (k < n && k != idx.back()) idx.push_back(k);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

std::optional<double> stable_min_order(const TailFunction& T1,
                                       const TailFunction& T2,
                                       std::span<const double> pts) {
  auto c_full = min_order_constant(T1, T2, pts);
  if (!c_full) return std::nullopt;
  if (pts.size() >= 16) {
    auto c_half = min_order_constant(T1, T2, pts.first(pts.size() / 2));
    if (c_half && !stable(*c_half, *c_full)) return std::nullopt;
  }
  return c_full;
}

std::optional<double> stable_max_reverse(const TailFunction& T1,
                                         const TailFunction& T2,
                                         std::span<const double> pts) {
  auto c_full = max_reverse_constant(T1, T2, pts);
  if (!c_full) return std::nullopt;
  if (pts.size() >= 16) {
    auto c_half = max_reverse_constant(T1, T2, pts.first(pts.size() / 2));
    if (c_half && !stable(*c_half, *c_full)) return std::nullopt;
  }
  return c_full;
}

}  // namespace

std::optional<EquivalenceWitness> order_check(const TailFunction& T1,
                                              const TailFunction& T2,
                                              std::span<const double> grid) {
  validate_grid(grid);
  for (std::size_t i : t0_candidates(grid.size())) {
    auto pts = grid.subspan(i);
    if (auto c = stable_min_order(T1, T2, pts)) {
      return EquivalenceWitness{grid[i], *c, *c};
    }
  }
  return std::nullopt;
}

std::optional<EquivalenceWitness> equivalence_check(
    const TailFunction& T1, const TailFunction& T2,
    std::span<const double> grid) {
  validate_grid(grid);
  for (std::size_t i : t0_candidates(grid.size())) {
    auto pts = grid.subspan(i);
    auto c1 = stable_min_order(T1, T2, pts);
    if (!c1) continue;
    auto c2 = stable_max_reverse(T1, T2, pts);
    if (!c2) continue;
    return EquivalenceWitness{grid[i], *c1, *c2};
  }
  return std::nullopt;
}

TailFunction vee(const TailFunction& T1, const TailFunction& T2) {
  if (std::fabs(T1.total_mass() - T2.total_mass()) > 1e-12) {
    throw std::domain_error("vee: mismatched totalMass");
  }
  const double mass = T1.total_mass();
  ScalarFn eval = [T1, T2, mass](double t) -> double {
    if (t <= 0.0) return mass;
    const auto objective = [&](double x) {
      return T1(t * x) + T2(t * (1.0 - x));
    };
    constexpr int kGrid = 256;
    double best = objective(0.0);
    int best_i = 0;
    for (int i = 1; i < kGrid; ++i) {
      const double x = static_cast<double>(i) / (kGrid - 1);
      const double v = objective(x);
      if (v < best) {
        best = v;
        best_i = i;
      }
    }
    const double a =
        std::max(0.0, static_cast<double>(best_i - 1) / (kGrid - 1));
    const double b =
        std::min(1.0, static_cast<double>(best_i + 1) / (kGrid - 1));
    const GoldenResult r = golden_min(objective, a, b, 1e-10);
    return std::clamp(std::min(best, r.value), 0.0, mass);
  };
  return TailFunction(std::move(eval), mass, std::max(T1.t0(), T2.t0()),
                      Provenance::Composed);
}

double left_inverse(const TailFunction& T, double level, double t_lo,
                    double t_hi) {
  return solve_nonincreasing([&T](double t) { return T(t); }, level, t_lo,
                             t_hi, 1e-12);
}

}  // namespace ritails
