#include "ritails/grids.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ritails {

GridSpec parse_grid(const std::string& text) {
  std::istringstream iss(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(iss, part, ':')) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4) {
    throw std::invalid_argument("grid spec '" + text +
                                "': expected min:max:points[:lin]");
  }
  GridSpec spec{};
  try {
    spec.lo = std::stod(parts[0]);
    spec.hi = std::stod(parts[1]);
    spec.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid spec '" + text + "': bad number");
  }
  spec.log_spacing = true;
  if (parts.size() == 4) {
    if (parts[3] == "lin") {
      spec.log_spacing = false;
    } else {
      throw std::invalid_argument("grid spec '" + text + "': unknown suffix '" +
                                  parts[3] + "'");
    }
  }
  if (!(spec.lo > 0.0) || !(spec.hi > spec.lo) || spec.points < 2) {
    throw std::invalid_argument("grid spec '" + text +
                                "': need 0 < min < max and points >= 2");
  }
  return spec;
}

std::vector<double> make_grid(const GridSpec& spec) {
  return spec.log_spacing ? log_grid(spec.lo, spec.hi, spec.points)
                          : linear_grid(spec.lo, spec.hi, spec.points);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    g[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    g[i] = lo + (hi - lo) * i / (points - 1);
  }
  return g;
}

}  // namespace ritails
