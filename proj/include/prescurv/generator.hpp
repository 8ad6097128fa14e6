#pragma once

#include "prescurv/mesh.hpp"

namespace prescurv {

/// Closed genus-g surface: the boundary of a rectangular plate pierced by g
/// circular holes. The plate is a row of g unit square cells, each with a hole
/// of radius 1/4 at its centre; the plate is 1/4 thick. `resolution` is the
/// number of grid segments along each cell side. Requires g >= 1 and
/// resolution >= 2; the result always has chi = 2 - 2g.
TriangleMesh generate_genus_g(int g, int resolution);

}  // namespace prescurv
