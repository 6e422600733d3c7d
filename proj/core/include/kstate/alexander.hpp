#pragma once

#include <vector>

#include "kstate/diagram.hpp"
#include "kstate/poly.hpp"

namespace kstate {

/// The Alexander polynomial of a knot diagram by the region method: the
/// determinant of the crossing/region incidence matrix with two columns of
/// adjacent regions removed, normalized.
LaurentPolynomial alexander_polynomial(const Diagram& diagram);

/// The full n x (n+2) region incidence matrix, rows indexed by crossings and
/// columns by faces. Corner weights counterclockwise from the incoming
/// under-strand: t, -t, 1, -1.
std::vector<std::vector<LaurentPolynomial>> alexander_region_matrix(const Diagram& diagram);

/// The raw determinant after deleting the face columns `face_a`, `face_b`
/// (which must be adjacent across an edge). Defined up to +-t^k.
LaurentPolynomial alexander_raw_determinant(const Diagram& diagram, int face_a, int face_b);

enum class MurasugiVerdict { Fibered, NotFibered };

/// Murasugi's criterion for a reduced alternating knot diagram: fibered iff
/// the Alexander polynomial is monic.
MurasugiVerdict murasugi_verdict(const Diagram& diagram);

} // namespace kstate
