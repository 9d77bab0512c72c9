#pragma once

// Deterministic SVG diagrams of the (b,w)-plane.

#include <string>
#include <vector>

#include "wallcross/bwplane.hpp"

namespace wallcross {

struct Viewport {
  Rational b_lo, b_hi, w_lo, w_hi;
};

struct SceneLine {
  WallLine line;
  std::string label;
};

struct ScenePoint {
  PlanePoint at;
  std::string label;
};

struct Scene {
  Viewport viewport;
  std::vector<SceneLine> lines;
  std::vector<ScenePoint> points;
};

constexpr int kParabolaSamples = 97;

// The boundary of U is a path sampled at kParabolaSamples points, U is
// shaded, and each visible line becomes one <line> element.
std::string render_svg(const Scene& scene);
void write_svg(const Scene& scene, const std::string& path);

}  // namespace wallcross
