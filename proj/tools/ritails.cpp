// Command-line front end: every diagnostic and computation as a
// subcommand with CSV/JSON output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ritails/diagnostics.hpp"
#include "ritails/grids.hpp"
#include "ritails/montecarlo.hpp"
#include "ritails/space.hpp"
#include "ritails/witness.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace ritails;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Output {
  std::string format = "json";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open output file " + path);
      out << text;
    }
  }
};

json config_echo(const std::string& command, const json& extra) {
  json j{{"command", command}, {"version", kVersion}};
  j["config"] = extra;
  return j;
}

std::string rows_csv(const std::vector<std::pair<double, double>>& rows,
                     const char* h1, const char* h2) {
  std::ostringstream oss;
  oss << h1 << ',' << h2 << '\n';
  for (const auto& [a, b] : rows) oss << g17(a) << ',' << g17(b) << '\n';
  return oss.str();
}

void emit_table(const Output& out, const std::string& command,
                const json& config,
                const std::vector<std::pair<double, double>>& rows,
                const char* h1, const char* h2) {
  if (out.format == "csv") {
    out.write(rows_csv(rows, h1, h2));
    return;
  }
  json j = config_echo(command, config);
  json jrows = json::array();
  for (const auto& [a, b] : rows) jrows.push_back({{h1, a}, {h2, b}});
  j["rows"] = std::move(jrows);
  j["verdict"] = "ok";
  out.write(j.dump(2));
}

int emit_report(const Output& out, const std::string& command,
                const json& config, const DiagnosticsReport& rep) {
  if (out.format == "csv") {
    out.write(rep.to_csv());
  } else {
    json j = config_echo(command, config);
    j["report"] = rep.to_json();
    j["verdict"] = to_string(rep.verdict);
    out.write(j.dump(2));
  }
  return rep.verdict == Verdict::Violated ? 1 : 0;
}

RandomVariable parse_rv_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::istringstream iss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(iss, tok, ',')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("rv spec: bad token '" + tok + "'");
      }
      kv[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
    }
  }
  if (kind == "twopoint") {
    return two_point_rv(kv.at("v"), kv.at("p"));
  }
  if (kind == "const") {
    return constant_rv(kv.at("c"));
  }
  if (kind == "powersing") {
    return AnalyticRV(kv.at("alpha"));
  }
  throw std::invalid_argument("rv spec: unknown kind '" + kind + "'");
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("RI_TAILS_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return flag_seed;
}

SpaceDescriptor conjugate_space(const SpaceDescriptor& s) {
  if (s.family() == Family::Lp) {
    const double p = s.p();
    if (p == 1.0) return SpaceDescriptor::linf();
    return SpaceDescriptor::lp(p / (p - 1.0));
  }
  if (s.family() == Family::Linf) return SpaceDescriptor::lp(1.0);
  if (s.family() == Family::Orlicz) {
    return SpaceDescriptor::orlicz(conjugate_young(s.young()));
  }
  throw std::invalid_argument("no cataloged associate for " + s.label());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail-function calculus for rearrangement invariant spaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string space_spec, prime_spec, rv_spec = "twopoint:v=10,p=0.01";
  std::vector<std::string> space_specs;
  std::string t_spec = "2:1e6:200", delta_spec = "1e-6:1:200";
  std::string format, out_path;
  std::uint64_t seed = 1;
  std::size_t n = 1000000;
  double sigma = 1.0, wn = 1.0, alpha = 0.01, t_value = 10.0, lower_c = 1.0;

  const auto add_common = [&](CLI::App* cmd, const char* default_format) {
    format = default_format;
    cmd->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "Output path (default: stdout)");
  };

  auto* cmd_char = app.add_subcommand("char", "Characteristic T(t) table");
  cmd_char->add_option("--space", space_spec, "Space spec")->required();
  cmd_char->add_option("--t", t_spec, "t grid min:max:points[:lin]");
  add_common(cmd_char, "csv");

  auto* cmd_fund = app.add_subcommand("fundamental", "Fundamental phi(delta) table");
  cmd_fund->add_option("--space", space_spec, "Space spec")->required();
  cmd_fund->add_option("--delta", delta_spec, "delta grid");
  add_common(cmd_fund, "csv");

  auto* cmd_reg = app.add_subcommand("regularity", "Regularity diagnostic");
  cmd_reg->add_option("--space", space_spec, "Space spec")->required();
  cmd_reg->add_option("--t", t_spec, "t grid");
  add_common(cmd_reg, "json");

  auto* cmd_assoc = app.add_subcommand("associate", "Associate product identities");
  cmd_assoc->add_option("--space", space_spec, "Space spec")->required();
  cmd_assoc->add_option("--prime", prime_spec,
                        "Associate space spec (default: derived)");
  cmd_assoc->add_option("--t", t_spec, "t grid");
  add_common(cmd_assoc, "json");

  auto* cmd_sum = app.add_subcommand("sum", "Direct-sum sandwich bounds");
  cmd_sum->add_option("--space", space_specs, "Two space specs")
      ->expected(2)
      ->required();
  cmd_sum->add_option("--t", t_spec, "t grid");
  add_common(cmd_sum, "json");

  auto* cmd_wit = app.add_subcommand("witness", "Extremal witness report");
  cmd_wit->add_option("--space", space_spec, "Space spec")->required();
  cmd_wit->add_option("--t", t_value, "Atom location t");
  add_common(cmd_wit, "json");

  auto* cmd_mc = app.add_subcommand("mc", "Monte-Carlo tail bound validation");
  cmd_mc->add_option("--space", space_spec, "Space spec")->required();
  cmd_mc->add_option("--rv", rv_spec,
                     "Random variable: twopoint:v=..,p=.. | const:c=.. | "
                     "powersing:alpha=..");
  cmd_mc->add_option("--t", t_spec, "t grid");
  cmd_mc->add_option("--n", n, "Sample count");
  cmd_mc->add_option("--seed", seed, "RNG seed (RI_TAILS_SEED overrides)");
  add_common(cmd_mc, "json");

  auto* cmd_ci = app.add_subcommand("ci", "Confidence-interval radius");
  cmd_ci->add_option("--space", space_spec, "Space spec")->required();
  cmd_ci->add_option("--sigma", sigma, "Norm bound sigma");
  cmd_ci->add_option("--wn", wn, "Rate value w(n)");
  cmd_ci->add_option("--alpha", alpha, "Coverage level in (0,1)");
  add_common(cmd_ci, "json");

  auto* cmd_res = app.add_subcommand("resonant", "Resonant C/t bound");
  cmd_res->add_option("--space", space_spec, "Space spec")->required();
  cmd_res->add_option("--t", t_spec, "t grid");
  add_common(cmd_res, "json");
  (void)lower_c;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Output out{format, out_path};
  try {
    if (*cmd_char) {
      const SpaceDescriptor space = parse_space_spec(space_spec);
      const TailFunction T = characteristic(space);
      std::vector<std::pair<double, double>> rows;
      for (double t : make_grid(parse_grid(t_spec))) rows.emplace_back(t, T(t));
      emit_table(out, "char", {{"space", space_spec}, {"t", t_spec}}, rows,
                 "t", "T");
      return 0;
    }
    if (*cmd_fund) {
      const SpaceDescriptor space = parse_space_spec(space_spec);
      const ScalarFn phi = fundamental(space);
      std::vector<std::pair<double, double>> rows;
      for (double d : make_grid(parse_grid(delta_spec))) {
        rows.emplace_back(d, phi(d));
      }
      emit_table(out, "fundamental",
                 {{"space", space_spec}, {"delta", delta_spec}}, rows, "delta",
                 "phi");
      return 0;
    }
    if (*cmd_reg) {
      const auto grid = make_grid(parse_grid(t_spec));
      const auto rep =
          regularity_report(parse_space_spec(space_spec), grid);
      return emit_report(out, "regularity",
                         {{"space", space_spec}, {"t", t_spec}}, rep);
    }
    if (*cmd_assoc) {
      const SpaceDescriptor F = parse_space_spec(space_spec);
      const SpaceDescriptor Fp = prime_spec.empty()
                                     ? conjugate_space(F)
                                     : parse_space_spec(prime_spec);
      const auto grid = make_grid(parse_grid(t_spec));
      const auto rep = associate_product(F, Fp, grid);
      return emit_report(out, "associate",
                         {{"space", space_spec},
                          {"prime", prime_spec.empty() ? Fp.label() : prime_spec},
                          {"t", t_spec}},
                         rep);
    }
    if (*cmd_sum) {
      const SpaceDescriptor A = parse_space_spec(space_specs[0]);
      const SpaceDescriptor B = parse_space_spec(space_specs[1]);
      const auto grid = make_grid(parse_grid(t_spec));
      const auto rep =
          sum_characteristic_bounds(characteristic(A), characteristic(B), grid);
      return emit_report(
          out, "sum",
          {{"spaces", space_specs}, {"t", t_spec}}, rep);
    }
    if (*cmd_wit) {
      const SpaceDescriptor space = parse_space_spec(space_spec);
      WitnessReport rep = [&] {
        switch (space.family()) {
          case Family::Lp:
            return lp_witness(space.p(), t_value);
          case Family::Orlicz:
            return orlicz_witness(space.young(), t_value);
          case Family::Lorentz:
            return lorentz_witness(space.weight(), t_value);
          default:
            throw std::invalid_argument("witness: no construction for " +
                                        space.label());
        }
      }();
      json j = config_echo("witness", {{"space", space_spec}, {"t", t_value}});
      json atoms = json::array();
      for (const Atom& a : rep.rv.atoms()) {
        atoms.push_back({{"value", a.value}, {"prob", a.prob}});
      }
      j["report"] = {{"family", rep.family},
                     {"atoms", std::move(atoms)},
                     {"norm", rep.norm_value},
                     {"tailAtT", rep.tail_at_t},
                     {"characteristicAtT", rep.characteristic_at_t},
                     {"saturated", rep.saturated}};
      j["verdict"] = rep.saturated ? "saturated" : "not-saturated";
      out.write(j.dump(2));
      return rep.saturated ? 0 : 1;
    }
    if (*cmd_mc) {
      const auto grid = make_grid(parse_grid(t_spec));
      const auto rep =
          verify_tail_bound(parse_space_spec(space_spec), parse_rv_spec(rv_spec),
                            grid, n, effective_seed(seed));
      return emit_report(out, "mc",
                         {{"space", space_spec},
                          {"rv", rv_spec},
                          {"t", t_spec},
                          {"n", n},
                          {"seed", effective_seed(seed)}},
                         rep);
    }
    if (*cmd_ci) {
      const CiRequest req{sigma, wn, alpha, parse_space_spec(space_spec)};
      const double radius = confidence_interval(req);
      if (format == "csv") {
        out.write("radius\n" + g17(radius) + "\n");
      } else {
        json j = config_echo("ci", {{"space", space_spec},
                                    {"sigma", sigma},
                                    {"wn", wn},
                                    {"alpha", alpha}});
        j["radius"] = radius;
        j["verdict"] = "ok";
        out.write(j.dump(2));
      }
      return 0;
    }
    if (*cmd_res) {
      const auto grid = make_grid(parse_grid(t_spec));
      const auto rep = resonant_bound(parse_space_spec(space_spec), grid);
      return emit_report(out, "resonant",
                         {{"space", space_spec}, {"t", t_spec}}, rep);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
