#pragma once

#include <string>

#include "crossings.hpp"

namespace rcross {

// Presentational rendering of a straight-line drawing: vertices, edges, and a
// marker on every crossing. Never feeds back into computation.
std::string render_svg(const Drawing& d);

}  // namespace rcross
