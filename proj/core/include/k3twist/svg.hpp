#pragma once

#include <string>
#include <vector>

#include "k3twist/reflection_group.hpp"

namespace k3twist {

struct Window {
  double x_min = -1;
  double x_max = 4;
  double y_max = 2;
};

/// Arcs for the circles, vertical lines for the strip edges, dots with
/// labels for the points. Throws BadWindow.
std::string render_svg(const FordDomain& dom, const std::vector<HPoint>& points, const Window& window);

}  // namespace k3twist
