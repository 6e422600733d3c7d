#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kstate/poly.hpp"

namespace kstate {

/// One row of the bundled diagram table. `alexander` is absent for links
/// (the table stores it for knots only).
struct CorpusEntry {
  std::string name;
  std::string pd;
  bool alternating_diagram = false;
  bool fibered = false;
  std::optional<LaurentPolynomial> alexander;
};

/// Loads a CSV with header `name,pd,alternating,fibered,alexander`.
/// Every pd must parse and validate; duplicate names are rejected; errors
/// carry 1-based line numbers.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
std::vector<CorpusEntry> parse_corpus_csv(const std::string& text);

} // namespace kstate
