#include "hexwalk/lattice.hpp"

#include <cmath>
#include <string>

#include "hexwalk/error.hpp"

namespace hexwalk {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid parameter";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::unsupported_configuration: return "unsupported configuration";
    case ErrorKind::singular_point: return "singular point";
    case ErrorKind::numerical_failure: return "numerical failure";
    case ErrorKind::io: return "i/o error";
  }
  return "unknown error";
}

const char* to_string(Color color) noexcept {
  switch (color) {
    case Color::red: return "red";
    case Color::green: return "green";
    case Color::blue: return "blue";
  }
  return "?";
}

double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

int positive_mod(int value, int n) noexcept {
  const int r = value % n;
  return r < 0 ? r + n : r;
}

}  // namespace

HexLattice::HexLattice(int n) : n_(n) {
  require(n >= 2 && n % 2 == 0, ErrorKind::invalid_parameter,
          "lattice size must be an even integer >= 2, got " + std::to_string(n));
}

bool HexLattice::contains(const VertexLabel& v) const noexcept {
  return v.x >= 0 && v.x < n_ && v.y >= 0 && v.y < n_ && (v.s == 0 || v.s == 1);
}

std::size_t HexLattice::index(const VertexLabel& v) const {
  require(contains(v), ErrorKind::invalid_parameter,
          "vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) + "," +
              std::to_string(v.s) + ") outside lattice of size " + std::to_string(n_));
  return static_cast<std::size_t>(v.s) * cells_per_sublattice() +
         static_cast<std::size_t>(v.y) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(v.x);
}

VertexLabel HexLattice::label(std::size_t index) const {
  require(index < size(), ErrorKind::invalid_parameter,
          "flat index " + std::to_string(index) + " out of range");
  const auto per = cells_per_sublattice();
  const auto rest = index % per;
  return {static_cast<int>(rest % static_cast<std::size_t>(n_)),
          static_cast<int>(rest / static_cast<std::size_t>(n_)),
          static_cast<int>(index / per)};
}

VertexLabel HexLattice::wrap(int x, int y, int s) const noexcept {
  return {positive_mod(x, n_), positive_mod(y, n_), s};
}

VertexLabel HexLattice::translate(const VertexLabel& v, int dx, int dy) const noexcept {
  return wrap(v.x + dx, v.y + dy, v.s);
}

VertexLabel HexLattice::partner(const VertexLabel& v, Color color) const {
  require(contains(v), ErrorKind::invalid_parameter, "partner: vertex outside lattice");
  const int step = v.s == 1 ? 1 : -1;
  switch (color) {
    case Color::red: return wrap(v.x + step, v.y, 1 - v.s);
    case Color::green: return wrap(v.x, v.y + step, 1 - v.s);
    case Color::blue: return {v.x, v.y, 1 - v.s};
  }
  return v;
}

std::array<VertexLabel, 3> HexLattice::neighbors(const VertexLabel& v) const {
  return {partner(v, Color::red), partner(v, Color::green), partner(v, Color::blue)};
}

std::vector<TessellationCell> HexLattice::tessellation(Color color) const {
  std::vector<TessellationCell> cells;
  cells.reserve(cells_per_sublattice());
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < n_; ++x) {
      const VertexLabel full{x, y, 1};
      cells.push_back({color, full, partner(full, color)});
    }
  }
  return cells;
}

Point2D HexLattice::position(const VertexLabel& v) noexcept {
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  return {2.0 * half_sqrt3 * v.x + half_sqrt3 * v.y + half_sqrt3 * v.s,
          1.5 * v.y + 0.5 * v.s};
}

}  // namespace hexwalk
