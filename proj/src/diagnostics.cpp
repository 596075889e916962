#include "ritails/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ritails {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exact:
      return "exact";
    case Verdict::BoundedRatio:
      return "boundedRatio";
    case Verdict::Unbounded:
      return "unbounded";
    case Verdict::Violated:
      return "violated";
  }
  return "unknown";
}

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json DiagnosticsReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    rows_json.push_back(
        {{"x", r.x}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}});
  }
  nlohmann::json j{{"subject", subject},
                   {"verdict", to_string(verdict)},
                   {"rows", std::move(rows_json)},
                   {"notes", notes}};
  if (C) j["C"] = *C;
  if (c1) j["c1"] = *c1;
  if (c2) j["c2"] = *c2;
  if (aux_c1) j["aux_c1"] = *aux_c1;
  if (aux_c2) j["aux_c2"] = *aux_c2;
  return j;
}

std::string DiagnosticsReport::to_csv() const {
  std::ostringstream oss;
  oss << "t,lhs,rhs,ratio\n";
  for (const ReportRow& r : rows) {
    oss << g17(r.x) << ',' << g17(r.lhs) << ',' << g17(r.rhs) << ','
        << g17(r.ratio) << '\n';
  }
  return oss.str();
}

DiagnosticsReport regularity_report(const SpaceDescriptor& space,
                                    std::span<const double> t_grid) {
  if (space.measure() != MeasureKind::Probabilistic) {
    throw std::invalid_argument("regularity_report: measure must be probabilistic");
  }
  if (space.family() == Family::Linf) {
    throw std::invalid_argument("regularity_report: Linf has a flat fundamental");
  }
  const ScalarFn phi = fundamental(space);
  const TailFunction T = characteristic(space);
  const ScalarFn g = [&phi](double s) { return 1.0 / phi(1.0 / s); };

  // g is only increasing where phi(1/s) decreases; the gridBlowup
  // asymptotic turns over near delta = 1, so inversion is restricted to
  // the increasing branch s >= e^{beta*B}.
  double s_lo = 1.0 + 1e-9;
  if (space.family() == Family::Gls &&
      space.psi().form() == PsiFunction::Form::GridBlowup) {
    s_lo = std::exp(space.psi().beta() * space.psi().B()) + 1e-9;
  }

  DiagnosticsReport rep;
  rep.subject = "regularity " + space.label();
  double rho_min = kInf, rho_max = 0.0;
  bool monotone = true;
  double prev = -kInf;
  for (double t : t_grid) {
    const double ginv = invert_increasing(g, t, s_lo, 2.0 * s_lo, 1e30, 1e-11);
    const double rho = ginv * T(t);
    rep.rows.push_back({t, rho, 1.0, rho});
    rho_min = std::min(rho_min, rho);
    rho_max = std::max(rho_max, rho);
    if (rho < prev * (1.0 - 1e-6)) monotone = false;
    prev = rho;
  }
  rep.c1 = rho_min;
  rep.c2 = rho_max;
  double max_dev = 0.0;
  for (const ReportRow& r : rep.rows) {
    max_dev = std::max(max_dev, std::fabs(r.ratio - 1.0));
  }
  if (max_dev <= 1e-6) {
    rep.verdict = Verdict::Exact;
  } else if (monotone && rho_max >= 5.0 * rho_min) {
    rep.verdict = Verdict::Unbounded;
  } else {
    rep.verdict = Verdict::BoundedRatio;
  }
  std::ostringstream oss;
  oss << "max |rho-1| = " << max_dev << "; rho range [" << rho_min << ", "
      << rho_max << "]";
  rep.notes = oss.str();
  return rep;
}

namespace {

bool conjugate_exponents(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  const double pa = a.family() == Family::Linf ? kInf : a.p();
  const double pb = b.family() == Family::Linf ? kInf : b.p();
  const double ia = std::isfinite(pa) ? 1.0 / pa : 0.0;
  const double ib = std::isfinite(pb) ? 1.0 / pb : 0.0;
  return std::fabs(ia + ib - 1.0) <= 1e-6;
}

bool young_conjugate_pair(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  const YoungFunction conj = conjugate_young(a.young());
  for (double v : {0.5, 2.0, 10.0}) {
    const double want = conj(v);
    const double got = b.young()(v);
    const double scale = std::max({std::fabs(want), std::fabs(got), 1e-12});
    if (std::fabs(want - got) > 1e-4 * scale) return false;
  }
  return true;
}

}  // namespace

DiagnosticsReport associate_product(const SpaceDescriptor& F,
                                    const SpaceDescriptor& Fprime,
                                    std::span<const double> t_grid) {
  const bool lp_pair = (F.family() == Family::Lp || F.family() == Family::Linf) &&
                       (Fprime.family() == Family::Lp ||
                        Fprime.family() == Family::Linf);
  const bool orlicz_pair =
      F.family() == Family::Orlicz && Fprime.family() == Family::Orlicz;
  if (lp_pair) {
    if (!conjugate_exponents(F, Fprime)) {
      throw std::invalid_argument(
          "associate_product: Lp pair needs 1/p + 1/q = 1");
    }
  } else if (orlicz_pair) {
    if (!young_conjugate_pair(F, Fprime)) {
      throw std::invalid_argument(
          "associate_product: Orlicz pair is not Young-conjugate");
    }
  } else {
    throw std::invalid_argument(
        "associate_product: pair is not in the associate catalog");
  }

  const TailFunction TF = characteristic(F);
  const TailFunction TFp = characteristic(Fprime);
  const ScalarFn phiF = fundamental(F);
  const ScalarFn phiFp = fundamental(Fprime);

  DiagnosticsReport rep;
  rep.subject = "associate " + F.label() + " / " + Fprime.label();
  double ratio_min = kInf, ratio_max = 0.0;
  bool violated = false;
  double max_dev = 0.0;
  for (double t : t_grid) {
    // [1/T]^{-1}(t) is the smallest s with T(s) <= 1/t
    const double a = left_inverse(TF, 1.0 / t);
    const double b = left_inverse(TFp, 1.0 / t);
    const double product = a * b;
    const double ratio = product / t;
    rep.rows.push_back({t, product, t, ratio});
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
    max_dev = std::max(max_dev, std::fabs(ratio - 1.0));
    if (product < t * (1.0 - 1e-9)) violated = true;
  }
  rep.c1 = ratio_min;
  rep.c2 = ratio_max;

  double phi_min = kInf, phi_max = 0.0;
  for (double t : t_grid) {
    const double delta = 1.0 / t;
    if (delta > 1.0) continue;
    const double r = phiF(delta) * phiFp(delta) / delta;
    phi_min = std::min(phi_min, r);
    phi_max = std::max(phi_max, r);
  }
  rep.aux_c1 = phi_min;
  rep.aux_c2 = phi_max;

  if (violated) {
    rep.verdict = Verdict::Violated;
  } else if (lp_pair && max_dev <= 1e-9 &&
             std::fabs(phi_min - 1.0) <= 1e-9 &&
             std::fabs(phi_max - 1.0) <= 1e-9) {
    rep.verdict = Verdict::Exact;
  } else {
    rep.verdict = Verdict::BoundedRatio;
  }
  std::ostringstream oss;
  oss << "inverse-characteristic product / t in [" << ratio_min << ", "
      << ratio_max << "]; phi product / delta in [" << phi_min << ", "
      << phi_max << "]";
  rep.notes = oss.str();
  return rep;
}

DiagnosticsReport resonant_bound(const SpaceDescriptor& space,
                                 std::span<const double> t_grid) {
  if (space.measure() != MeasureKind::Probabilistic) {
    throw std::invalid_argument("resonant_bound: measure must be probabilistic");
  }
  const TailFunction T = characteristic(space);
  DiagnosticsReport rep;
  rep.subject = "resonant bound " + space.label();
  double C3 = 0.0;
  for (double t : t_grid) {
    const double v = t * T(t);
    rep.rows.push_back({t, v, 0.0, 0.0});
    C3 = std::max(C3, v);
  }
  for (ReportRow& r : rep.rows) {
    r.rhs = C3;
    r.ratio = C3 > 0.0 ? r.lhs / C3 : 0.0;
  }
  rep.C = C3;

  // trend check across the top decade
  const double t_hi = t_grid.back();
  double first_in_decade = -1.0, last = 0.0;
  bool rising = true;
  double prev = -kInf;
  for (const ReportRow& r : rep.rows) {
    if (r.x < t_hi / 10.0) continue;
    if (first_in_decade < 0.0) first_in_decade = r.lhs;
    if (r.lhs < prev) rising = false;
    prev = r.lhs;
    last = r.lhs;
  }
  const bool trending = rising && last > 1.05 * first_in_decade;
  rep.verdict = trending ? Verdict::Violated : Verdict::BoundedRatio;
  std::ostringstream oss;
  oss << "C3 = " << C3 << "; top-decade values " << first_in_decade << " -> "
      << last;
  rep.notes = oss.str();
  return rep;
}

DiagnosticsReport sum_characteristic_bounds(const TailFunction& TF,
                                            const TailFunction& TG,
                                            std::span<const double> t_grid) {
  if (std::fabs(TF.total_mass() - TG.total_mass()) > 1e-12) {
    throw std::domain_error("sum_characteristic_bounds: mismatched totalMass");
  }
  const TailFunction upper = vee(TF, TG);
  const TailFunction lower = TailFunction(
      [TF, TG](double t) { return std::max(TF(t), TG(t)); }, TF.total_mass(),
      std::max(TF.t0(), TG.t0()), Provenance::Composed);

  DiagnosticsReport rep;
  rep.subject = "direct-sum sandwich";
  bool violated = false;
  for (double t : t_grid) {
    const double lo = lower(t);
    const double hi = upper(t);
    rep.rows.push_back({t, lo, hi, lo > 0.0 ? hi / lo : 0.0});
    if (lo > hi * (1.0 + 1e-9) + 1e-12) violated = true;
  }
  if (violated) {
    rep.verdict = Verdict::Violated;
    rep.notes = "sandwich violated";
    return rep;
  }
  rep.verdict = Verdict::BoundedRatio;
  if (auto w = equivalence_check(upper, lower, t_grid)) {
    rep.c1 = w->c1;
    rep.c2 = w->c2;
    std::ostringstream oss;
    oss << "vee ~ max: witness t0=" << w->t0 << " C1=" << w->c1
        << " C2=" << w->c2;
    rep.notes = oss.str();
  } else {
    rep.notes = "no equivalence witness between vee and max on this grid";
  }
  return rep;
}

}  // namespace ritails
