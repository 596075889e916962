#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ritails/space.hpp"
#include "ritails/tail.hpp"

namespace ritails {

enum class Verdict { Exact, BoundedRatio, Unbounded, Violated };

std::string to_string(Verdict v);

struct ReportRow {
  double x;
  double lhs;
  double rhs;
  double ratio;
};

/// Structured pass/fail evidence for one property-level check.
struct DiagnosticsReport {
  std::string subject;
  std::vector<ReportRow> rows;
  Verdict verdict = Verdict::BoundedRatio;
  std::optional<double> C;
  std::optional<double> c1;
  std::optional<double> c2;
  std::optional<double> aux_c1;  // secondary ratio extremes (phi products)
  std::optional<double> aux_c2;
  std::string notes;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Ratio rho(t) = g^{-1}(t) * T(t) with g(t) = 1/phi(1/t); verdict
/// exact when rho stays at 1, unbounded when rho grows monotonically by
/// a factor >= 5 across the grid.
DiagnosticsReport regularity_report(const SpaceDescriptor& space,
                                    std::span<const double> t_grid);

/// Product identities for cataloged associate pairs: the inverse
/// characteristics multiply to t, the fundamental functions to delta.
DiagnosticsReport associate_product(const SpaceDescriptor& F,
                                    const SpaceDescriptor& Fprime,
                                    std::span<const double> t_grid);

/// C3 = max over the grid of t * T(t); flags a growth trend in the top
/// decade.
DiagnosticsReport resonant_bound(const SpaceDescriptor& space,
                                 std::span<const double> t_grid);

/// Direct-sum sandwich: max(TF, TG) <= vee(TF, TG) per grid point, plus
/// an equivalence check between the two bounds.
DiagnosticsReport sum_characteristic_bounds(const TailFunction& TF,
                                            const TailFunction& TG,
                                            std::span<const double> t_grid);

}  // namespace ritails
