#ifndef RAMSEY_DENSITY_HPP
#define RAMSEY_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

struct SubgraphWitness {
  std::vector<int> vertices;  // sorted
  EdgeSet edges;              // sorted

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct DensityReport {
  Rational value;
  SubgraphWitness witness;       // extremal subgraph, deterministic tie-break
  uint64_t witness_count = 0;    // subgraphs attaining the extremum
};

// 2-density (e-1)/(v-2); 1/2 for a single edge; 0 for edgeless graphs.
Rational d2(const Graph& h);
// max of d2 over subgraphs, with witness
DensityReport m2(const Graph& h);

// asymmetric 2-density e_H / (v_H - 2 + 1/m2(G)); 0 unless both nonempty
Rational d2_asym(const Graph& g, const Graph& h);
// same with an explicit positive x in place of m2(G)
Rational d2_x(const Rational& x, const Graph& h);
DensityReport m2_asym(const Graph& g, const Graph& h);
DensityReport m2_x(const Rational& x, const Graph& h);

// min over proper subgraphs J (2 <= v_J < v_H) of (e_H - e_J)/(v_H - v_J);
// requires v_H >= 3
DensityReport m_star(const Graph& h);
// m*/(e_H - m*(v_H - 2)); requires nonempty H with v_H >= 3. Zero when H has
// an isolated vertex (m* = 0).
Rational x_star(const Graph& h);

// (e_H - a)/(v_H - b) for a <= 1, b < 2; 0 for edgeless graphs
Rational d_ab(const Graph& h, const Rational& a, const Rational& b);
DensityReport m_ab(const Graph& h, const Rational& a, const Rational& b);

bool is_2_balanced(const Graph& h);
bool is_strictly_2_balanced(const Graph& h);
bool is_balanced_wrt(const Graph& g, const Graph& h);
bool is_strictly_balanced_wrt(const Graph& g, const Graph& h);
bool is_balanced_ab(const Graph& h, const Rational& a, const Rational& b);
bool is_strictly_balanced_ab(const Graph& h, const Rational& a,
                             const Rational& b);

// -1/m2(G,H); both graphs must be nonempty
Rational threshold_exponent(const Graph& g, const Graph& h);

struct BalancednessBundle {
  bool two_balanced = false;
  bool strictly_two_balanced = false;
  std::optional<bool> balanced_wrt_g;
  std::optional<bool> strictly_balanced_wrt_g;
  std::optional<bool> balanced_ab;
  std::optional<bool> strictly_balanced_ab;
};
BalancednessBundle balancedness(const std::optional<Graph>& g, const Graph& h,
                                const std::optional<Rational>& a = {},
                                const std::optional<Rational>& b = {});

}  // namespace ramsey

#endif  // RAMSEY_DENSITY_HPP
