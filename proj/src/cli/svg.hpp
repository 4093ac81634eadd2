#pragma once

#include <filesystem>
#include <vector>

#include "hexwalk/lattice.hpp"

namespace hexwalk::cli {

/// Heatmap of a probability distribution on the unwrapped hexagonal
/// embedding: one circle per vertex with p > 0, coloured by p / max p.
void write_heatmap_svg(const std::filesystem::path& path, const HexLattice& lattice,
                       const std::vector<double>& probability);

}  // namespace hexwalk::cli
