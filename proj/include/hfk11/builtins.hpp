#pragma once

#include <string>
#include <vector>

#include "hfk11/diagram.hpp"

namespace hfk {

/// Diagram library. Valid names: unknot, trefoil_left, trefoil_right,
/// figure_eight, knot_9_42. Throws UnknownDiagram otherwise.
Diagram builtin_diagram(const std::string& name);

const std::vector<std::string>& builtin_names();

}  // namespace hfk
