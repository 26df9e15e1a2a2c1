#ifndef RAMSEY_CANON_HPP
#define RAMSEY_CANON_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Stable color refinement (1-WL). Returns one color id per vertex; ids are
// canonical across isomorphic graphs, cells ordered by refinement history.
std::vector<int> refine_colors(const Graph& g,
                               std::vector<int> initial = {});

// Isomorphism invariant: refinement quotient (cell sizes + inter-cell edge
// counts). Equal keys are necessary but not sufficient for isomorphism.
std::string invariant_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Set of graphs up to isomorphism: invariant-key buckets + exact
// backtracking isomorphism inside a bucket.
class IsoClassSet {
 public:
  // Returns the class index; new classes get fresh consecutive indices.
  size_t find_or_insert(const Graph& g);
  // Returns class index or npos when absent (never inserts).
  size_t find(const Graph& g) const;
  size_t size() const { return reps_.size(); }
  const Graph& representative(size_t idx) const { return reps_[idx]; }
  const std::vector<Graph>& representatives() const { return reps_; }

  static constexpr size_t npos = static_cast<size_t>(-1);

 private:
  std::vector<Graph> reps_;
  std::unordered_map<std::string, std::vector<size_t>> buckets_;
};

// All pairwise non-isomorphic graphs with at most max_vertices vertices
// (max 8), generated by vertex augmentation; deterministic order.
std::vector<Graph> enumerate_universe(int max_vertices, bool connected_only);

}  // namespace ramsey

#endif  // RAMSEY_CANON_HPP
