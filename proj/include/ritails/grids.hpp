#pragma once

#include <string>
#include <vector>

namespace ritails {

struct GridSpec {
  double lo;
  double hi;
  int points;
  bool log_spacing = true;
};

/// Parses "min:max:points[:lin]"; log spacing is the default.
GridSpec parse_grid(const std::string& text);

std::vector<double> make_grid(const GridSpec& spec);
std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace ritails
