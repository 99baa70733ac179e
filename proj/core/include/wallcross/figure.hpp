#ifndef WALLCROSS_FIGURE_HPP_
#define WALLCROSS_FIGURE_HPP_

// SVG chart of the chamber space in the Poincare disk: walls as geodesic
// arcs, sample points with their images, and the paths between them.

#include <string>
#include <vector>

#include "wallcross/chambers.hpp"
#include "wallcross/lattice.hpp"

namespace wallcross {

struct FigurePoint {
  std::string label;
  Rational u, v;  // Poincare coordinates
};

struct FigureSpec {
  Integer wall_c_max = 13;
  std::vector<FigurePoint> points;
  std::vector<std::vector<LatticeClass>> words;
  int width = 600;
  int height = 600;
  int disk_radius = 280;
  HomologyOrientation orientation = HomologyOrientation::Positive;

  /// Walls up to c = 13, the points (0,0) and (-1/2,-1/2), and the word
  /// reflecting in s - e1 + e2 and then s + e1 + e2.
  static FigureSpec standard();
};

/// Elements carry class="wall", "point", "path" or "crossing". Output is
/// byte-identical for a fixed spec. Throws OutsideDisk.
std::string render_figure(const FigureSpec& spec);

} // namespace wallcross

#endif
