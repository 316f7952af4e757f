#pragma once

#include "vsbound/polytope.hpp"
#include "vsbound/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vsbound {

struct SvgPanel {
  std::string title;
  LatticePolytope polytope;
  /// The contraction/dilation drawn alongside Δ (usually mu or n/d).
  Rational dilation;
  std::optional<LatticePoint> witness;
};

/// Side-by-side 2D drawings of Δ, dilation·Δ, the lattice grid and the
/// witness point. Output is a pure function of the panels (byte-identical
/// for identical input). Throws InputError unless every polytope is 2D and
/// every dilation is finite.
std::string render_polytope_svg(const std::vector<SvgPanel>& panels);

/// Vertices of conv(generators ∪ {0}) in counter-clockwise order.
std::vector<std::pair<std::int64_t, std::int64_t>> hull_2d(const LatticePolytope& P);

}  // namespace vsbound
