#pragma once

// Test utility: PD code of a braid closure. Strands run downward; the word
// uses generators +-1, +-2, ... (positive: the right strand passes under).
// Every generator index must appear so the closure has no crossingless
// component.
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

inline std::string braid_closure_pd(int strands, const std::vector<int>& word) {
  struct UF {
    std::vector<int> parent;
    explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
  };
  const int crossings = static_cast<int>(word.size());
  UF uf(strands + 4 * crossings);
  int next_label = strands;
  std::vector<int> current(strands);
  std::iota(current.begin(), current.end(), 0);
  std::vector<std::array<int, 4>> tuples;
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= strands) throw std::runtime_error("bad generator");
    const int in_l = current[i], in_r = current[i + 1];
    const int out_l = next_label++, out_r = next_label++;
    if (letter > 0) {
      tuples.push_back({in_r, in_l, out_l, out_r}); // right strand under
    } else {
      tuples.push_back({in_l, out_l, out_r, in_r}); // left strand under
    }
    current[i] = out_l;
    current[i + 1] = out_r;
  }
  for (int s = 0; s < strands; ++s) uf.unite(current[s], s); // closure
  std::vector<int> dense(strands + 4 * crossings, 0);
  int used = 0;
  std::ostringstream out;
  for (size_t c = 0; c < tuples.size(); ++c) {
    if (c) out << ' ';
    out << "X[";
    for (int s = 0; s < 4; ++s) {
      const int root = uf.find(tuples[c][s]);
      if (dense[root] == 0) dense[root] = ++used;
      out << dense[root] << (s < 3 ? "," : "]");
    }
  }
  return out.str();
}
