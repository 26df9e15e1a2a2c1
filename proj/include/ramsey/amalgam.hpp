#ifndef RAMSEY_AMALGAM_HPP
#define RAMSEY_AMALGAM_HPP

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

// A member of F(G,H): a copy of G with each edge embedded into its own copy
// of H, the e_G copies pairwise edge-disjoint. loss = number of vertices
// saved by overlaps: v = v_G + e_G (v_H - 2) - loss.
struct Amalgam {
  Graph graph;
  Embedding central;                  // the underlying copy of G
  std::vector<Embedding> copy_embeddings;  // one per G-edge, in edge order
  std::vector<EdgeSet> copy_edges;
  int loss = 0;
};

struct AmalgamCaps {
  int max_vertices = 16;
  size_t max_results = 1 << 20;
};

// All isomorphism types obtainable by gluing; vertex identifications are
// unrestricted as long as the H-copies stay pairwise edge-disjoint.
std::vector<Amalgam> enumerate_amalgams(const Graph& g, const Graph& h,
                                        const AmalgamCaps& caps = {});

struct CoverCertificate {
  bool covered = false;
  std::vector<EdgeSet> family;  // e_G pairwise edge-disjoint H-copies
};

// Is this copy of g in a coverable by e_G pairwise edge-disjoint copies of h,
// one per copy edge?
CoverCertificate is_h_covered(const Graph& a, const Embedding& g_copy,
                              const Graph& g, const Graph& h);

// Vertex pairs {x,y} of g_minus whose insertion turns it into a copy of g.
std::vector<Edge> completing_pairs(const Graph& g, const Graph& g_minus);

// Red H-covered copies of g_minus in E_H(K) and the pairs completing them.
struct BaseGraphResult {
  EdgeSet gamma;                      // pairs completing >= z copies
  std::vector<long long> pair_counts; // x_e per pair, indexed by pair_index
  long long red_h_covered_copies = 0;
};

BaseGraphResult base_graph(const Graph& k, const Coloring& h_coloring,
                           const Graph& g, const Graph& g_minus,
                           const Graph& h, long long z);

// z = max(1, round(z_const n^{v_G-2} (n^{v_H-2} p1^{e_H})^{e_G-1}))
long long z_from_shape(double z_const, int n, const Graph& g, const Graph& h,
                       double p1);

}  // namespace ramsey

#endif  // RAMSEY_AMALGAM_HPP
