#ifndef RAMSEY_SUBGRAPH_HPP
#define RAMSEY_SUBGRAPH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Injective vertex map pattern-vertex -> host-vertex; every pattern edge
// lands on a host edge. Isolated pattern vertices occupy distinct host
// vertices too.
struct Embedding {
  std::vector<int> map;

  int image(int pattern_vertex) const { return map[pattern_vertex]; }
  uint64_t image_mask() const {
    uint64_t m = 0;
    for (int v : map) m |= 1ULL << v;
    return m;
  }
  EdgeSet image_edges(const Graph& pattern) const;

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.map == b.map;
  }
  friend bool operator<(const Embedding& a, const Embedding& b) {
    return a.map < b.map;
  }
};

// Visits embeddings in lexicographic order of the vertex map. Return false
// from the callback to stop.
void for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(const Embedding&)>& fn);

struct EmbeddingList {
  std::vector<Embedding> embeddings;
  bool truncated = false;
};
EmbeddingList enumerate_embeddings(const Graph& host, const Graph& pattern,
                                   uint64_t cap);

uint64_t count_embeddings(const Graph& host, const Graph& pattern);
uint64_t automorphism_count(const Graph& g);

// Number of distinct subgraphs of host isomorphic to pattern
// (= embeddings / |Aut(pattern)|).
uint64_t count_copies(const Graph& host, const Graph& pattern);

// Distinct copies of a pattern with no isolated vertices, each reported once
// as its (sorted) image edge set.
std::vector<EdgeSet> enumerate_copy_edge_sets(
    const Graph& host, const Graph& pattern,
    size_t cap = static_cast<size_t>(-1), bool* truncated = nullptr);

enum class SubgraphMode { kAll, kInduced };

// Streams subgraphs (vertex subset + edge subset) with at least min_vertices
// vertices. Induced mode visits each vertex subset once with its induced
// edges; "all" mode additionally ranges over every edge subset.
// Deterministic order: vertex masks ascending numerically, edge submasks
// ascending. Return false to stop.
void for_each_subgraph(
    const Graph& g, SubgraphMode mode, int min_vertices,
    const std::function<bool(uint64_t vertex_mask, const EdgeSet&)>& fn);

}  // namespace ramsey

#endif  // RAMSEY_SUBGRAPH_HPP
