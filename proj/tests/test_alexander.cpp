#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "kstate/alexander.hpp"
#include "kstate/corpus.hpp"
#include "kstate/decide.hpp"
#include "testpaths.hpp"

using namespace kstate;

namespace {
const char* kKink = "X[1,1,2,2]";
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kFive2 = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

LaurentPolynomial poly(std::string_view serialized) {
  return LaurentPolynomial::parse(serialized).normalized();
}
} // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPolynomial t = LaurentPolynomial::term(1, 1);
  const LaurentPolynomial p = t * t - t + LaurentPolynomial(1);
  CHECK(p.serialize() == "0:1;1:-1;2:1");
  CHECK(p.pretty() == "t^2 - t + 1");
  CHECK((p * p).divided_exactly_by(p) == p);
  CHECK(p.evaluate(-1) == 3);
  CHECK(p.monic());
  // normalization moves the lowest exponent to zero with positive lead
  const LaurentPolynomial shifted = LaurentPolynomial::term(-3, -2) * p;
  CHECK(shifted.normalized() == LaurentPolynomial(2) * p);
  CHECK(LaurentPolynomial::parse("2:5;0:-1").serialize() == "0:-1;2:5");
  CHECK(LaurentPolynomial().serialize() == "0:0");
}

TEST_CASE("table values") {
  CHECK(alexander_polynomial(parse_pd(kKink)) == poly("0:1"));
  CHECK(alexander_polynomial(parse_pd(kTrefoil)) == poly("0:1;1:-1;2:1"));
  CHECK(alexander_polynomial(parse_pd(kFigureEight)) == poly("0:1;1:-3;2:1"));
  CHECK(alexander_polynomial(parse_pd(kFive2)) == poly("0:2;1:-3;2:2"));
}

TEST_CASE("alexander symmetry and odd determinant over the corpus") {
  for (const CorpusEntry& entry : load_corpus(test_corpus_path())) {
    const Diagram d = parse_pd(entry.pd);
    if (d.component_count() != 1) continue;
    const LaurentPolynomial delta = alexander_polynomial(d);
    CHECK(delta.reciprocal().normalized() == delta);
    const BigInt det = delta.evaluate(-1);
    CHECK(det % 2 != 0);
    if (entry.alexander) CHECK(delta == *entry.alexander);
  }
}

TEST_CASE("column choice changes the determinant by a unit") {
  for (const char* pd : {kTrefoil, kFigureEight, kFive2}) {
    const Diagram d = parse_pd(pd);
    const LaurentPolynomial reference = alexander_polynomial(d);
    for (int e = 0; e < d.edge_count(); ++e) {
      const auto darts = d.edge_darts(e);
      const int left = d.face_of(darts[0]);
      const int right = d.face_of(darts[1]);
      if (left == right) continue;
      const LaurentPolynomial raw = alexander_raw_determinant(d, left, right);
      CHECK(raw.normalized() == reference);
    }
  }
}

TEST_CASE("region matrix shape") {
  const Diagram d = parse_pd(kTrefoil);
  const auto matrix = alexander_region_matrix(d);
  REQUIRE(matrix.size() == 3);
  for (const auto& row : matrix) {
    CHECK(row.size() == 5); // n + 2 faces
    // entries are 0, +-1 or +-t
    for (const LaurentPolynomial& p : row) {
      if (p.is_zero()) continue;
      CHECK(p.lowest_exponent() == p.highest_exponent());
      CHECK(p.lowest_exponent() >= 0);
      CHECK(p.lowest_exponent() <= 1);
      const BigInt c = p.coefficient(p.lowest_exponent());
      CHECK((c == 1 || c == -1));
    }
  }
}

TEST_CASE("murasugi verdicts") {
  CHECK(murasugi_verdict(parse_pd(kFigureEight)) == MurasugiVerdict::Fibered);
  CHECK(murasugi_verdict(parse_pd(kFive2)) == MurasugiVerdict::NotFibered);
  CHECK(murasugi_verdict(parse_pd(kTrefoil)) == MurasugiVerdict::Fibered);
}

TEST_CASE("murasugi preconditions") {
  CHECK(kind_of([] { murasugi_verdict(parse_pd(kHopf)); }) == ErrorKind::NotAKnot);
  CHECK(kind_of([] { alexander_polynomial(parse_pd(kHopf)); }) == ErrorKind::NotAKnot);
  CHECK(kind_of([] { murasugi_verdict(parse_pd(kKink)); }) == ErrorKind::NotReduced);
  // 8_19 is a knot but its diagram is not alternating
  CHECK(kind_of([] {
          murasugi_verdict(parse_pd("X[1,2,3,4] X[2,5,6,3] X[5,7,8,6] X[9,10,4,11] "
                                    "X[12,9,11,13] X[14,12,13,8] X[15,16,1,10] X[16,15,14,7]"));
        }) == ErrorKind::NotAlternatingDiagram);
}

TEST_CASE("oracle agreement with the tree criterion") {
  for (const CorpusEntry& entry : load_corpus(test_corpus_path())) {
    const Diagram d = parse_pd(entry.pd);
    if (d.component_count() != 1 || !entry.alternating_diagram || !d.reduced_diagram()) continue;
    const bool monic_fibered = murasugi_verdict(d) == MurasugiVerdict::Fibered;
    CHECK(monic_fibered == entry.fibered);
    const FiberVerdict v = decide_fiber(d, seifert_state(d));
    if (v.state_class.alternating || v.state_class.homogeneous) {
      CHECK((v.verdict == Verdict::Fibered) == monic_fibered);
      CHECK(v.verdict != Verdict::Unknown);
    }
  }
}
