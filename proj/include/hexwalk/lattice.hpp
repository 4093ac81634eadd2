#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

namespace hexwalk {

/// Site on the honeycomb torus. `s` is the sublattice bit: 0 for empty
/// vertices at x*e_x + y*e_y, 1 for full vertices shifted by alpha.
struct VertexLabel {
  int x = 0;
  int y = 0;
  int s = 0;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// The three edge colorings. Red, green and blue carry the walk's
/// Hamiltonians H0, H1 and H2 respectively.
enum class Color { red = 0, green = 1, blue = 2 };

inline constexpr std::array<Color, 3> kColors{Color::red, Color::green, Color::blue};

const char* to_string(Color color) noexcept;

/// Two-vertex polygon of a tessellation. `full` is always the (x,y,1) member.
struct TessellationCell {
  Color color;
  VertexLabel full;
  VertexLabel empty;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point2D a, Point2D b);

/// Honeycomb lattice of n x n hexagons with cyclic boundaries, N = 2n^2 sites.
///
/// Flat layout is sublattice-major, `s*n^2 + y*n + x`, so each sublattice is a
/// contiguous row-major n x n block (the FFT-friendly layout).
class HexLattice {
 public:
  /// Throws invalid_parameter unless n is even and >= 2.
  explicit HexLattice(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return 2 * cells_per_sublattice(); }
  std::size_t cells_per_sublattice() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  }

  bool contains(const VertexLabel& v) const noexcept;

  std::size_t index(const VertexLabel& v) const;
  VertexLabel label(std::size_t index) const;

  /// Wraps x and y into [0, n).
  VertexLabel wrap(int x, int y, int s) const noexcept;
  VertexLabel translate(const VertexLabel& v, int dx, int dy) const noexcept;

  /// The other member of v's cell in the given tessellation.
  VertexLabel partner(const VertexLabel& v, Color color) const;

  /// Red, green and blue neighbours, in that order.
  std::array<VertexLabel, 3> neighbors(const VertexLabel& v) const;

  /// n^2 disjoint cells covering every vertex once.
  std::vector<TessellationCell> tessellation(Color color) const;

  /// Unwrapped embedding with unit edges:
  /// e_x = (sqrt3, 0), e_y = (sqrt3/2, 3/2), alpha = (e_x + e_y)/3.
  static Point2D position(const VertexLabel& v) noexcept;

 private:
  int n_;
};

}  // namespace hexwalk
