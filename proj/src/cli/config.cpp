#include "config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "hexwalk/error.hpp"

namespace hexwalk::cli {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && ptr == text.data() + text.size(), ErrorKind::invalid_parameter,
          "cannot parse angle '" + std::string(whole) + "'");
  return value;
}

VertexLabel to_label(const std::vector<int>& v, const char* what) {
  require(v.size() == 3, ErrorKind::invalid_parameter,
          std::string(what) + " needs three integers x y s");
  return {v[0], v[1], v[2]};
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view whole = text;
  require(!text.empty(), ErrorKind::invalid_parameter, "empty angle");
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(text, whole);

  std::string_view coefficient = text.substr(0, pi_at);
  std::string_view rest = text.substr(pi_at + 2);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.remove_suffix(1);
  double value = std::numbers::pi;
  if (coefficient == "-") {
    value = -value;
  } else if (!coefficient.empty()) {
    value *= parse_number(coefficient, whole);
  }
  if (!rest.empty()) {
    require(rest.front() == '/', ErrorKind::invalid_parameter,
            "cannot parse angle '" + std::string(whole) + "'");
    const double denominator = parse_number(rest.substr(1), whole);
    require(denominator != 0.0, ErrorKind::invalid_parameter, "angle divides by zero");
    value /= denominator;
  }
  return value;
}

std::vector<double> ExperimentConfig::angles() const {
  std::vector<double> out;
  out.reserve(theta.size());
  for (const auto& t : theta) out.push_back(parse_angle(t));
  return out;
}

VertexLabel ExperimentConfig::marked_label() const { return to_label(marked, "--marked"); }
VertexLabel ExperimentConfig::vertex_label() const { return to_label(vertex, "--vertex"); }

Metadata ExperimentConfig::metadata() const {
  auto join = [](const auto& values) {
    std::string s;
    for (const auto& v : values) {
      if (!s.empty()) s += ' ';
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
        s += v;
      } else {
        s += std::to_string(v);
      }
    }
    return s;
  };
  return {{"command", command},       {"n", std::to_string(n)},
          {"theta", join(theta)},     {"grid", std::to_string(grid)},
          {"tmax", std::to_string(t_max)}, {"tmin", std::to_string(t_min)},
          {"init", init},             {"marked", join(marked)},
          {"vertex", join(vertex)},   {"sizes", join(sizes)},
          {"seed", std::to_string(seed)}, {"trials", std::to_string(trials)}};
}

}  // namespace hexwalk::cli
