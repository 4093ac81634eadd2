#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "csv.hpp"
#include "hexwalk/lattice.hpp"

namespace hexwalk::cli {

/// Parses "1.047", "pi", "pi/3", "2pi/3", "11*pi/30", "-pi/4".
double parse_angle(std::string_view text);

/// Options shared by all subcommands; unset numeric fields use the
/// subcommand's default.
struct ExperimentConfig {
  std::string command;
  int n = 0;
  std::vector<std::string> theta;
  int grid = 61;
  long t_max = -1;
  long t_min = 50;
  std::string init;
  std::vector<int> marked{0, 0, 0};
  std::vector<int> vertex{0, 0, 0};
  std::vector<int> sizes;
  std::filesystem::path out = ".";
  std::uint64_t seed = 1;
  int trials = 20;

  std::vector<double> angles() const;
  VertexLabel marked_label() const;
  VertexLabel vertex_label() const;
  Metadata metadata() const;
};

}  // namespace hexwalk::cli
