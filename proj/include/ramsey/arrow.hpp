#ifndef RAMSEY_ARROW_HPP
#define RAMSEY_ARROW_HPP

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

// Union of the edge sets of all copies of h in a.
EdgeSet h_edges(const Graph& a, const Graph& h);

enum class ArrowStatus { kArrow, kNoArrow, kUnknown };

struct ArrowOptions {
  // Two-color reduction: color only E_H(F), everything else implicitly blue.
  bool restrict_to_h_edges = false;
  uint64_t node_budget = 1ULL << 34;
  // Counter-based DFS instead of CDCL for two colors (the multicolor path);
  // kept as an independent reference engine for cross-validation.
  bool use_reference_dfs = false;
};

struct ArrowResult {
  ArrowStatus status = ArrowStatus::kUnknown;
  std::optional<Coloring> witness;  // present iff status == kNoArrow
  uint64_t nodes_explored = 0;

  bool arrow() const {
    if (status == ArrowStatus::kUnknown)
      throw std::logic_error("arrow undecided (budget exhausted)");
    return status == ArrowStatus::kArrow;
  }
};

// Decides F -> (targets[0], ..., targets[k-1]): does every k-coloring of the
// (possibly restricted) domain contain a monochromatic copy of some target in
// its color? Exact; never returns a wrong boolean under budget pressure.
ArrowResult arrow_decide(const Graph& f, const std::vector<Graph>& targets,
                         const ArrowOptions& options = {});

// Independent witness checker: true iff the coloring contains no
// monochromatic copy of target_i in color i. Uses copy counting on the color
// classes, not the search machinery.
bool verify_coloring(const Graph& f, const std::vector<Graph>& targets,
                     const Coloring& c);

}  // namespace ramsey

#endif  // RAMSEY_ARROW_HPP
