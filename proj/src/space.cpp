#include "ritails/space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ritails {

SpaceDescriptor SpaceDescriptor::lp(double p, MeasureKind measure) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("SpaceDescriptor::lp: p must be >= 1");
  }
  SpaceDescriptor s;
  s.family_ = Family::Lp;
  s.measure_ = measure;
  s.p_ = p;
  return s;
}

SpaceDescriptor SpaceDescriptor::linf(MeasureKind measure) {
  SpaceDescriptor s;
  s.family_ = Family::Linf;
  s.measure_ = measure;
  s.p_ = kInf;
  return s;
}

SpaceDescriptor SpaceDescriptor::lorentz(WeightFunction w) {
  SpaceDescriptor s;
  s.family_ = Family::Lorentz;
  s.measure_ = MeasureKind::Probabilistic;
  s.w_ = std::move(w);
  return s;
}

SpaceDescriptor SpaceDescriptor::orlicz(YoungFunction N) {
  if (!N.strictly_increasing()) {
    throw std::invalid_argument(
        "SpaceDescriptor::orlicz: Young function must be strictly increasing");
  }
  SpaceDescriptor s;
  s.family_ = Family::Orlicz;
  s.measure_ = MeasureKind::Probabilistic;
  s.N_ = std::move(N);
  return s;
}

SpaceDescriptor SpaceDescriptor::gls(PsiFunction psi) {
  if (!std::isfinite(psi.support_hi()) &&
      psi.form() != PsiFunction::Form::PowerRoot) {
    throw std::invalid_argument(
        "SpaceDescriptor::gls: B must be finite unless psi is powerRoot");
  }
  SpaceDescriptor s;
  s.family_ = Family::Gls;
  s.measure_ = MeasureKind::Probabilistic;
  s.psi_ = std::move(psi);
  return s;
}

std::string SpaceDescriptor::label() const {
  std::ostringstream oss;
  switch (family_) {
    case Family::Lp:
      oss << "Lp(" << p_ << ")";
      break;
    case Family::Linf:
      oss << "Linf";
      break;
    case Family::Lorentz:
      oss << "Lorentz(" << w_->label() << ")";
      break;
    case Family::Orlicz:
      oss << "Orlicz(" << N_->label() << ")";
      break;
    case Family::Gls:
      oss << "GLS(" << psi_->label() << ")";
      break;
  }
  if (measure_ == MeasureKind::SigmaFiniteInfinite) oss << "[infinite]";
  return oss.str();
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body) {
  std::map<std::string, std::string> kv;
  std::istringstream iss(body);
  std::string tok;
  while (std::getline(iss, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("space spec: bad token '" + tok + "'");
    }
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

double parse_num(const std::map<std::string, std::string>& kv,
                 const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw std::invalid_argument("space spec: missing key '" + key + "'");
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("space spec: bad number '" + it->second +
                                "' for key '" + key + "'");
  }
}

MeasureKind parse_measure(const std::map<std::string, std::string>& kv) {
  auto it = kv.find("measure");
  if (it == kv.end()) return MeasureKind::Probabilistic;
  if (it->second == "prob") return MeasureKind::Probabilistic;
  if (it->second == "infinite") return MeasureKind::SigmaFiniteInfinite;
  throw std::invalid_argument("space spec: unknown measure '" + it->second +
                              "'");
}

}  // namespace

SpaceDescriptor parse_space_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  const std::string body =
      colon == std::string::npos ? "" : text.substr(colon + 1);
  const auto kv = parse_kv(body);

  if (family == "lp") {
    return SpaceDescriptor::lp(parse_num(kv, "p"), parse_measure(kv));
  }
  if (family == "linf") {
    return SpaceDescriptor::linf(parse_measure(kv));
  }
  if (family == "lorentz") {
    auto it = kv.find("w");
    if (it != kv.end() && it->second != "power") {
      throw std::invalid_argument("space spec: unknown weight form '" +
                                  it->second + "'");
    }
    return SpaceDescriptor::lorentz(WeightFunction::power(parse_num(kv, "p")));
  }
  if (family == "orlicz") {
    auto it = kv.find("form");
    const std::string form = it == kv.end() ? "power" : it->second;
    if (form == "power") {
      return SpaceDescriptor::orlicz(YoungFunction::power(parse_num(kv, "p")));
    }
    if (form == "powerlog") {
      return SpaceDescriptor::orlicz(
          YoungFunction::power_log(parse_num(kv, "p"), parse_num(kv, "q")));
    }
    throw std::invalid_argument("space spec: unknown orlicz form '" + form +
                                "'");
  }
  if (family == "gls") {
    auto it = kv.find("form");
    const std::string form = it == kv.end() ? "gridblowup" : it->second;
    if (form == "gridblowup") {
      const double B = kv.count("B") ? parse_num(kv, "B") : parse_num(kv, "b");
      return SpaceDescriptor::gls(
          PsiFunction::grid_blowup(B, parse_num(kv, "beta")));
    }
    if (form == "powerroot") {
      return SpaceDescriptor::gls(PsiFunction::power_root(parse_num(kv, "m")));
    }
    if (form == "degenerate") {
      return SpaceDescriptor::gls(PsiFunction::degenerate(parse_num(kv, "r")));
    }
    throw std::invalid_argument("space spec: unknown gls form '" + form + "'");
  }
  throw std::invalid_argument("space spec: unknown family '" + family + "'");
}

namespace {

// E g(omega^{-alpha}) over (0,1) by adaptive quadrature after the
// substitution omega = v^m; m is picked from the growth exponent so the
// transformed integrand vanishes at v = 0.
double analytic_expectation(double alpha, double growth_p, const ScalarFn& g) {
  const double c = alpha * growth_p;
  if (c >= 1.0) return kInf;
  const double m = std::max(2.0, std::ceil(2.0 / (1.0 - c)));
  const ScalarFn integrand = [&](double v) -> double {
    if (v <= 0.0) return 0.0;
    const double lv = std::log(v);
    const double jac = m * std::exp((m - 1.0) * lv);
    const double u = std::exp(-alpha * m * lv);
    const double gv = g(u);
    if (!std::isfinite(gv)) return 0.0;  // suppressed by the jacobian
    return jac * gv;
  };
  return adaptive_simpson(integrand, 0.0, 1.0, 1e-11);
}

double lp_moment_discrete(double p, const DiscreteRV& rv) {
  if (!std::isfinite(p)) {
    double mx = 0.0;
    for (const Atom& a : rv.atoms()) mx = std::max(mx, a.value);
    return mx;
  }
  double s = 0.0;
  for (const Atom& a : rv.atoms()) s += a.prob * std::pow(a.value, p);
  return std::pow(s, 1.0 / p);
}

double luxemburg_norm(const YoungFunction& N, const RandomVariable& rv) {
  const auto expectation = [&](double k) -> double {
    if (const auto* d = std::get_if<DiscreteRV>(&rv)) {
      double s = 0.0;
      for (const Atom& a : d->atoms()) s += a.prob * N(a.value / k);
      return s;
    }
    const auto& a = std::get<AnalyticRV>(rv);
    // growth exponent of N: exact for the parametric forms, probed
    // numerically for custom evaluators
    double growth = N.p();
    if (N.form() == YoungFunction::Form::Custom) {
      growth = std::log(N(1e6) / N(1e3)) / std::log(1e3);
    }
    return analytic_expectation(a.alpha(), growth,
                                [&](double u) { return N(u / k); });
  };
  constexpr double kLo = 1e-12, kHi = 1e12;
  if (expectation(kHi) > 1.0) return kInf;
  if (expectation(kLo) <= 1.0) return 0.0;
  double lo = kLo, hi = kHi;
  for (int i = 0; i < 200 && hi / lo - 1.0 > 1e-10; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (expectation(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double lorentz_quasinorm(const WeightFunction& w, const RandomVariable& rv) {
  const TailFunction T = tail_of_rv(rv);
  double best = 0.0;
  if (const auto* d = std::get_if<DiscreteRV>(&rv)) {
    for (const Atom& a : d->atoms()) {
      if (a.value > 0.0) best = std::max(best, w(a.value) * T(a.value));
    }
  }
  // refinement grid; for a step tail and increasing w the atoms already
  // carry the supremum, the grid covers analytic tails
  for (int i = 0; i <= 400; ++i) {
    const double t = std::pow(10.0, -6.0 + 18.0 * i / 400.0);
    best = std::max(best, w(t) * T(t));
  }
  return best;
}

double gls_norm(const PsiFunction& psi, const RandomVariable& rv) {
  if (psi.form() == PsiFunction::Form::Degenerate) {
    // Remark-style convention C/infinity = 0: only p = r contributes.
    return lp_moment_norm(psi.r(), rv);
  }
  const double A = std::max(1.0, psi.support_lo());
  const double B = psi.support_hi();
  double best = 0.0;
  constexpr int kPoints = 400;
  for (int i = 0; i < kPoints; ++i) {
    double p;
    if (std::isfinite(B)) {
      // geometric refinement toward B, where blowup psi concentrates
      // the supremum for heavy-tailed inputs
      const double u = 8.0 * i / (kPoints - 1);
      p = B - (B - A) * std::pow(10.0, -u);
    } else {
      p = A * std::pow(1e6 / A, static_cast<double>(i) / (kPoints - 1));
    }
    const double pv = psi(p);
    if (!std::isfinite(pv) || !(pv > 0.0)) continue;
    const double mom = lp_moment_norm(p, rv);
    if (!std::isfinite(mom)) return kInf;
    best = std::max(best, mom / pv);
  }
  return best;
}

}  // namespace

double lp_moment_norm(double p, const RandomVariable& rv) {
  if (const auto* d = std::get_if<DiscreteRV>(&rv)) {
    return lp_moment_discrete(p, *d);
  }
  const auto& a = std::get<AnalyticRV>(rv);
  if (!std::isfinite(p)) return kInf;  // omega^{-alpha} is unbounded
  const double moment = analytic_expectation(
      a.alpha(), p, [p](double u) { return std::pow(u, p); });
  if (!std::isfinite(moment)) return kInf;
  return std::pow(moment, 1.0 / p);
}

double norm(const SpaceDescriptor& space, const RandomVariable& rv) {
  switch (space.family()) {
    case Family::Lp:
      return lp_moment_norm(space.p(), rv);
    case Family::Linf:
      return lp_moment_norm(kInf, rv);
    case Family::Orlicz:
      return luxemburg_norm(space.young(), rv);
    case Family::Lorentz:
      return lorentz_quasinorm(space.weight(), rv);
    case Family::Gls:
      return gls_norm(space.psi(), rv);
  }
  throw std::logic_error("norm: unhandled family");
}

TailFunction characteristic(const SpaceDescriptor& space) {
  switch (space.family()) {
    case Family::Lp: {
      const double p = space.p();
      if (space.measure() == MeasureKind::SigmaFiniteInfinite) {
        return TailFunction([p](double t) { return std::pow(t, -p); }, kInf,
                            kDefaultT0, Provenance::ClosedForm);
      }
      return TailFunction::closed_form(
          [p](double t) { return std::min(1.0, std::pow(t, -p)); });
    }
    case Family::Linf:
      return TailFunction::closed_form(
          [](double t) { return t > 1.0 ? 0.0 : 1.0; });
    case Family::Lorentz: {
      const WeightFunction w = space.weight();
      return TailFunction::closed_form(
          [w](double t) { return std::min(1.0, 1.0 / w(t)); });
    }
    case Family::Orlicz: {
      const YoungFunction N = space.young();
      return TailFunction::closed_form(
          [N](double t) { return std::min(1.0, 1.0 / N(t)); });
    }
    case Family::Gls:
      return gls_upper_tail(space.psi());
  }
  throw std::logic_error("characteristic: unhandled family");
}

ScalarFn fundamental(const SpaceDescriptor& space) {
  const bool prob = space.measure() == MeasureKind::Probabilistic;
  const auto check_domain = [prob](double delta) {
    if (!(delta > 0.0) || (prob && delta > 1.0)) {
      throw std::domain_error("fundamental: delta outside (0,1]");
    }
  };
  switch (space.family()) {
    case Family::Lp: {
      const double p = space.p();
      return [p, check_domain](double delta) {
        check_domain(delta);
        return std::pow(delta, 1.0 / p);
      };
    }
    case Family::Linf:
      return [check_domain](double delta) {
        check_domain(delta);
        return 1.0;
      };
    case Family::Orlicz: {
      const YoungFunction N = space.young();
      return [N, check_domain](double delta) {
        check_domain(delta);
        return 1.0 / N.inverse(1.0 / delta);
      };
    }
    case Family::Lorentz: {
      // Quasinorm of an indicator of measure delta: its tail is delta on
      // (0, 1], so the supremum is delta * sup_{t <= 1} w(t).
      const WeightFunction w = space.weight();
      double sup_w = 0.0;
      for (int i = 0; i <= 1000; ++i) {
        sup_w = std::max(sup_w, w(static_cast<double>(i) / 1000.0));
      }
      return [sup_w, check_domain](double delta) {
        check_domain(delta);
        return delta * sup_w;
      };
    }
    case Family::Gls: {
      const PsiFunction& psi = space.psi();
      if (psi.form() == PsiFunction::Form::Degenerate) {
        const double r = psi.r();
        return [r, check_domain](double delta) {
          check_domain(delta);
          return std::pow(delta, 1.0 / r);
        };
      }
      if (psi.form() == PsiFunction::Form::GridBlowup) {
        // Asymptotic form with unit constants; ratios only, never
        // absolute equality, in downstream diagnostics.
        const double B = psi.B();
        const double beta = psi.beta();
        return [B, beta, check_domain](double delta) {
          check_domain(delta);
          return std::pow(delta, 1.0 / B) *
                 std::pow(std::fabs(std::log(delta)), beta);
        };
      }
      throw std::domain_error(
          "fundamental: not available for this psi form");
    }
  }
  throw std::logic_error("fundamental: unhandled family");
}

PsiFunction natural_psi(const RandomVariable& rv,
                        std::span<const double> p_grid) {
  std::vector<std::pair<double, double>> table;
  for (double p : p_grid) {
    const double m = lp_moment_norm(p, rv);
    if (!std::isfinite(m)) break;  // truncate support at the first blowup
    table.emplace_back(p, m);
  }
  if (table.size() < 2) {
    throw std::domain_error("natural_psi: fewer than two finite moments");
  }
  return PsiFunction::natural(std::move(table));
}

YoungFunction conjugate_young(const YoungFunction& N) {
  if (!convex_on_grid([&N](double u) { return N(u); }, 0.0, 10.0)) {
    throw std::domain_error("conjugate_young: N is not convex");
  }
  ScalarFunction h;
  h.lo = 0.0;
  h.hi = kInf;
  h.eval = [N](double u) { return N(u); };
  h.convexity_checked = true;
  return YoungFunction::custom(
      [h](double v) { return std::max(0.0, legendre(h, v)); },
      "conj(" + N.label() + ")");
}

}  // namespace ritails
