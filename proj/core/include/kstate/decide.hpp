#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstate/classify.hpp"
#include "kstate/stategraph.hpp"

namespace kstate {

enum class Verdict { Fibered, NotFibered, Unknown };
enum class CertificateKind { SpanningTree, NotATree, MixedParallel, AlternatingInnerCycle, None };

std::string_view to_string(Verdict verdict);
std::string_view to_string(CertificateKind kind);

/// Checkable evidence for a verdict. Exactly the fields of the certificate's
/// kind are populated.
struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::vector<int> tree_edges;         ///< SpanningTree: edge set of the reduced graph
  std::vector<int> cycle_edges;        ///< NotATree: a cycle in the reduced graph
  std::vector<int> cycle_vertices;     ///< NotATree: its vertices (tails)
  std::array<int, 2> edge_pair{-1, -1}; ///< MixedParallel
  std::optional<InnerCycle> inner_cycle; ///< AlternatingInnerCycle
};

struct StateClass {
  bool alternating = false;
  bool homogeneous = false;
};

struct FiberVerdict {
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
  StateClass state_class;
};

/// Decides whether the state surface is a fiber of the link exterior.
/// A tree reduced graph always gives Fibered. A mixed parallel pair or an
/// alternating inner cycle always gives NotFibered. For alternating or
/// homogeneous states a non-tree reduced graph gives NotFibered. Everything
/// else is Unknown.
FiberVerdict decide_fiber(const Diagram& diagram, const KauffmanState& state);

/// Replays a verdict's certificate against the inputs.
bool verify_certificate(const Diagram& diagram, const KauffmanState& state,
                        const FiberVerdict& verdict);

struct CensusRow {
  std::string state;
  int circles = 0;
  int euler = 0;
  bool alternating = false;
  bool homogeneous = false;
  Verdict verdict = Verdict::Unknown;
  CertificateKind certificate = CertificateKind::None;
};

struct CensusResult {
  std::vector<CensusRow> rows; ///< lexicographic state order, A < B
  int fibered = 0;
  int not_fibered = 0;
  int unknown = 0;
};

/// Runs all 2^n states. Rows are computed independently (possibly on several
/// threads) and reported in lexicographic order regardless of scheduling.
CensusResult census(const Diagram& diagram, int max_crossings = 20, int threads = 0);

std::string to_json_string(const FiberVerdict& verdict);
std::string to_csv(const CensusResult& result);

} // namespace kstate
