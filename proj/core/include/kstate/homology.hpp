#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kstate/stategraph.hpp"

namespace kstate {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Proper two-coloring of the reduced graph by surface side; the lowest
/// vertex is "+" (+1).
struct SignedVertexLabeling {
  std::vector<signed char> sign; ///< +1 or -1 per vertex
};

SignedVertexLabeling vertex_signs(const ReducedGraph& reduced);

/// The abelianized surface-complement map on first homology for a uniform
/// checkerboard reduced graph. Column i is the image of the generator of the
/// inner cycle cycles[i] in the basis dual to the bounded white regions.
struct HomologyMatrix {
  IntMatrix entries;
  std::vector<InnerCycle> cycles; ///< matrix index -> inner cycle
  int outer_region = -1;          ///< region id of the unbounded white region C_0
};

/// Walks every inner cycle counterclockwise (the face traversal order of the
/// embedding); an edge crossed from "+" to "-" adds +1 on the diagonal, an
/// edge crossed from "-" to "+" subtracts 1 in the row of the face across it
/// (nothing when that face is C_0).
HomologyMatrix homology_matrix(const ReducedGraph& reduced);

struct DominantDetReport {
  bool hypotheses_hold = false; ///< a_ii >= max(2, sum |a_ij|) for all rows i
  BigInt determinant = 0;
  bool conclusion_verified = false; ///< hypotheses fail, det = 0, or det >= 2
};

DominantDetReport check_dominant_det(const IntMatrix& matrix);

/// The tridiagonal family witnessing sharpness: determinant 2 for every n.
IntMatrix sharp_family(int n);

/// Exact determinant by fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& matrix);

std::string to_json_string(const HomologyMatrix& matrix);

} // namespace kstate
