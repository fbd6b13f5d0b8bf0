#pragma once

#include "sharp/configuration.hpp"

#include <string>
#include <vector>

namespace sharp {

/// N equally spaced points on S^1, the first at angle 0. N >= 2.
PointConfiguration polygon(int n);

/// d+2 vertices of a regular simplex on S^d, from a factorization of the
/// Gram matrix with unit diagonal and off-diagonal -1/(d+1).
PointConfiguration simplex(int d);

/// The 2(d+1) vectors +-e_i in R^{d+1}.
PointConfiguration cross_polytope(int d);

/// 12 vertices: cyclic permutations of (0, +-1, +-phi), normalized.
PointConfiguration icosahedron();

/// The 240 roots of E8, normalized onto S^7.
PointConfiguration e8_roots();

/// The 27-point Schlafli configuration on S^5 (spectrum {-1/2, 1/4}).
PointConfiguration schlafli_27();

/// Resolves names such as "square", "polygon:7", "simplex:3", "cross_polytope:4",
/// "icosahedron", "schlafli", "e8". Throws std::invalid_argument listing the
/// closest known names when the name is not recognized.
PointConfiguration catalog_by_name(const std::string& name);

/// Names accepted by catalog_by_name that denote fixed members.
std::vector<std::string> catalog_names();

/// The configurations exercised by the verification sweeps: polygons 2..8,
/// simplices d=1..6, cross-polytopes d=1..7, icosahedron, Schlafli, E8.
std::vector<PointConfiguration> standard_catalog();

} // namespace sharp
