#include "kstate/alexander.hpp"

#include <algorithm>
#include <limits>

namespace kstate {

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Fraction-free Bareiss elimination over Z[t].
LaurentPolynomial poly_determinant(PolyMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPolynomial(1);
  LaurentPolynomial previous_pivot(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divided_exactly_by(previous_pivot);
      }
      m[i][k] = {};
    }
    previous_pivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

void require_knot(const Diagram& diagram) {
  if (diagram.component_count() != 1)
    fail(ErrorKind::NotAKnot, "diagram has " + std::to_string(diagram.component_count()) +
                                  " components");
}

} // namespace

std::vector<int> alexander_numbering(const Diagram& diagram) {
  // Region indices: crossing an oriented edge from its right side to its
  // left side raises the index by one. The face left of the travel
  // direction is the face of the tail dart.
  std::vector<int> nu(diagram.face_count(), std::numeric_limits<int>::min());
  nu[0] = 0;
  std::vector<int> queue{0};
  std::vector<std::vector<std::pair<int, int>>> neighbors(diagram.face_count()); // (face, delta)
  for (int e = 0; e < diagram.edge_count(); ++e) {
    const auto darts = diagram.edge_darts(e);
    const int tail = diagram.incoming(darts[0]) ? darts[1] : darts[0];
    const int head = diagram.mate(tail);
    const int left = diagram.face_of(tail);
    const int right = diagram.face_of(head);
    neighbors[left].emplace_back(right, -1);
    neighbors[right].emplace_back(left, +1);
  }
  while (!queue.empty()) {
    const int f = queue.back();
    queue.pop_back();
    for (auto [g, delta] : neighbors[f]) {
      if (nu[g] == std::numeric_limits<int>::min()) {
        nu[g] = nu[f] + delta;
        queue.push_back(g);
      } else if (nu[g] != nu[f] + delta) {
        fail(ErrorKind::Internal, "inconsistent region numbering");
      }
    }
  }
  return nu;
}

PolyMatrix alexander_region_matrix(const Diagram& diagram) {
  const int n = diagram.crossing_count();
  PolyMatrix matrix(n, std::vector<LaurentPolynomial>(diagram.face_count()));
  // Region relation at a crossing with corners P0..P3 counterclockwise from
  // the incoming under-strand: +1, -t^a, +t^a, -t^(a+c) where a and c are
  // the index steps P0->P1 and P2->P3. Scaled per row into {+-1, +-t}.
  const std::vector<int> nu = alexander_numbering(diagram);
  for (int c = 0; c < n; ++c) {
    const int v0 = nu[diagram.face_of(4 * c + 0)];
    const int v1 = nu[diagram.face_of(4 * c + 1)];
    const int v2 = nu[diagram.face_of(4 * c + 2)];
    const int v3 = nu[diagram.face_of(4 * c + 3)];
    const int a = v0 - v1;
    int exponents[4] = {0, a, a, a + v2 - v3};
    const int shift = -std::min({exponents[0], exponents[1], exponents[2], exponents[3]});
    for (int s = 0; s < 4; ++s) {
      const int face = diagram.face_of(4 * c + s);
      const LaurentPolynomial weight =
          LaurentPolynomial::term(exponents[s] + shift, (s % 2 == 0) ? 1 : -1);
      matrix[c][face] = matrix[c][face] + weight;
    }
  }
  return matrix;
}

LaurentPolynomial alexander_raw_determinant(const Diagram& diagram, int face_a, int face_b) {
  require_knot(diagram);
  const PolyMatrix full = alexander_region_matrix(diagram);
  PolyMatrix reduced;
  reduced.reserve(full.size());
  for (const auto& row : full) {
    std::vector<LaurentPolynomial> r;
    r.reserve(row.size() - 2);
    for (int f = 0; f < static_cast<int>(row.size()); ++f)
      if (f != face_a && f != face_b) r.push_back(row[f]);
    reduced.push_back(std::move(r));
  }
  return poly_determinant(std::move(reduced));
}

LaurentPolynomial alexander_polynomial(const Diagram& diagram) {
  require_knot(diagram);
  // Delete the two faces flanking the first edge whose sides differ.
  int face_a = -1, face_b = -1;
  for (int e = 0; e < diagram.edge_count(); ++e) {
    const auto darts = diagram.edge_darts(e);
    const int left = diagram.face_of(darts[0]);
    const int right = diagram.face_of(darts[1]);
    if (left != right) {
      face_a = left;
      face_b = right;
      break;
    }
  }
  if (face_a < 0) fail(ErrorKind::Internal, "no edge with two distinct sides");
  const LaurentPolynomial det = alexander_raw_determinant(diagram, face_a, face_b);
  if (det.is_zero())
    fail(ErrorKind::Internal, "region determinant vanished for a knot diagram");
  return det.normalized();
}

MurasugiVerdict murasugi_verdict(const Diagram& diagram) {
  require_knot(diagram);
  if (!diagram.alternating_diagram())
    fail(ErrorKind::NotAlternatingDiagram, "the criterion needs an alternating diagram");
  if (!diagram.reduced_diagram())
    fail(ErrorKind::NotReduced, "the diagram has a nugatory crossing");
  return alexander_polynomial(diagram).monic() ? MurasugiVerdict::Fibered
                                               : MurasugiVerdict::NotFibered;
}

} // namespace kstate
