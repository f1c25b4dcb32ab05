#pragma once

#include <string>

#include "agbcyl/abacus.hpp"
#include "agbcyl/cylindric.hpp"
#include "agbcyl/paths.hpp"

namespace agbcyl {

// Human-oriented ASCII pictures; the layout is not a stable format.

// Two periods of the cylinder: the upper copy is shifted d columns right.
std::string render_cyl(const CylPart& p);
// Grid with the polyline; deak counts replace the vertex marker.
std::string render_path(const DecoratedPath& h);
// r bead strings (● bead, ○ vacancy) with the yokes listed below.
std::string render_abacus(const CylPart& p);

}  // namespace agbcyl
