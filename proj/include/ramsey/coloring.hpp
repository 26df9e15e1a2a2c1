#ifndef RAMSEY_COLORING_HPP
#define RAMSEY_COLORING_HPP

#include <cstdint>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

// Edge coloring over a designated domain. Edges of the host outside the
// domain implicitly take off_domain_color (blue in the two-color setting).
struct Coloring {
  int n = 0;
  int num_colors = 2;
  EdgeSet domain;               // sorted
  std::vector<int8_t> colors;   // parallel to domain
  int off_domain_color = 1;

  int color_of(const Edge& e) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), e);
    if (it == domain.end() || !(*it == e)) return -1;
    return colors[static_cast<size_t>(it - domain.begin())];
  }

  // Subgraph of host carrying exactly the edges of one color class.
  Graph color_class(const Graph& host, int color) const;

  std::string to_json() const;
  static Coloring from_json(const std::string& text);
};

}  // namespace ramsey

#endif  // RAMSEY_COLORING_HPP
