#pragma once

#include <string>

#include "rectrep/geometry.hpp"
#include "rectrep/permutation.hpp"

namespace rectrep::svg {

// Labeled rectangles, y axis pointing up.
std::string render_placement(const Placement& placement);

// Vertex i at (i, perm(i)) with the arcs of G_perm as straight segments.
std::string render_natural_embedding(const Permutation& perm);

}  // namespace rectrep::svg
