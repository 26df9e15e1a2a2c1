#include "ramsey/density.hpp"

#include <functional>

namespace ramsey {

namespace {

Rational d2_counts(int v, int e) {
  if (e == 0) return Rational(0);
  if (v == 2) return Rational(1, 2);  // K2
  return Rational(e - 1, v - 2);
}

std::vector<int> mask_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return out;
}

SubgraphWitness witness_from_mask(const Graph& g, uint64_t mask) {
  SubgraphWitness w;
  w.vertices = mask_vertices(mask);
  for (size_t i = 0; i < w.vertices.size(); ++i)
    for (size_t j = i + 1; j < w.vertices.size(); ++j)
      if (g.has_edge(w.vertices[i], w.vertices[j]))
        w.edges.push_back(Edge(w.vertices[i], w.vertices[j]));
  std::sort(w.edges.begin(), w.edges.end());
  return w;
}

// Extremizes a count-based density over induced subgraphs. Every maximizer
// (minimizer) of the measures used here is induced: each measure is strictly
// monotone in the edge count at fixed vertex count wherever it is nonzero.
// Tie-break: fewest vertices, fewest edges, lexicographically smallest
// vertex set.
DensityReport extremize(const Graph& h,
                        const std::function<Rational(int, int)>& f,
                        bool maximize, int min_vertices, int max_vertices) {
  struct Best {
    bool set = false;
    Rational value;
    int v = 0, e = 0;
    uint64_t mask = 0;
    std::vector<int> verts;
    uint64_t count = 0;
  } best;

  uint64_t top = 1ULL << h.vertex_count();
  for (uint64_t mask = 0; mask < top; ++mask) {
    int v = __builtin_popcountll(mask);
    if (v < min_vertices || v > max_vertices) continue;
    int e = h.induced_edge_count(mask);
    Rational val = f(v, e);
    if (!best.set) {
      best = {true, val, v, e, mask, mask_vertices(mask), 1};
      continue;
    }
    bool better = maximize ? val > best.value : val < best.value;
    if (better) {
      best = {true, val, v, e, mask, mask_vertices(mask), 1};
      continue;
    }
    if (val != best.value) continue;
    ++best.count;
    std::vector<int> verts = mask_vertices(mask);
    bool tie_better = v != best.v   ? v < best.v
                      : e != best.e ? e < best.e
                                    : verts < best.verts;
    if (tie_better) {
      Rational value = best.value;
      uint64_t count = best.count;
      best = {true, value, v, e, mask, std::move(verts), count};
    }
  }
  if (!best.set)
    throw std::domain_error("no admissible subgraph in density extremum");
  DensityReport report;
  report.value = best.value;
  report.witness = witness_from_mask(h, best.mask);
  report.witness_count = best.count;
  return report;
}

void check_subgraph_cap(const Graph& h) {
  if (h.vertex_count() > 16)
    throw std::invalid_argument(
        "exhaustive subgraph extrema capped at 16 vertices");
}

// Largest density among proper subgraphs; used by the strictness predicates.
// Dominating candidates: every proper induced subgraph, plus the spanning
// subgraph with one edge removed (the measures are monotone in e).
bool strictly_dominates(const Graph& h,
                        const std::function<Rational(int, int)>& f,
                        const Rational& whole_value) {
  int n = h.vertex_count();
  if (h.edge_count() >= 1 &&
      f(n, h.edge_count() - 1) >= whole_value)
    return false;
  uint64_t full = h.full_mask();
  for (uint64_t mask = 0; mask < full; ++mask) {
    int v = __builtin_popcountll(mask);
    int e = h.induced_edge_count(mask);
    if (f(v, e) >= whole_value) return false;
  }
  return true;
}

}  // namespace

Rational d2(const Graph& h) {
  return d2_counts(h.vertex_count(), h.edge_count());
}

DensityReport m2(const Graph& h) {
  check_subgraph_cap(h);
  return extremize(h, d2_counts, true, 0, h.vertex_count());
}

Rational d2_x(const Rational& x, const Graph& h) {
  if (x <= Rational(0))
    throw std::invalid_argument("d2_x requires positive x");
  if (h.edge_count() == 0) return Rational(0);
  return Rational(h.edge_count()) /
         (Rational(h.vertex_count() - 2) + x.inverse());
}

Rational d2_asym(const Graph& g, const Graph& h) {
  if (g.edge_count() == 0 || h.edge_count() == 0) return Rational(0);
  return d2_x(m2(g).value, h);
}

DensityReport m2_x(const Rational& x, const Graph& h) {
  check_subgraph_cap(h);
  if (x <= Rational(0))
    throw std::invalid_argument("m2_x requires positive x");
  Rational inv = x.inverse();
  auto f = [&inv](int v, int e) {
    if (e == 0) return Rational(0);
    return Rational(e) / (Rational(v - 2) + inv);
  };
  return extremize(h, f, true, 0, h.vertex_count());
}

DensityReport m2_asym(const Graph& g, const Graph& h) {
  check_subgraph_cap(h);
  if (g.edge_count() == 0) {
    // d2(G, .) is identically zero
    auto zero = [](int, int) { return Rational(0); };
    return extremize(h, zero, true, 0, h.vertex_count());
  }
  return m2_x(m2(g).value, h);
}

DensityReport m_star(const Graph& h) {
  check_subgraph_cap(h);
  int n = h.vertex_count();
  int m = h.edge_count();
  if (n < 3)
    throw std::domain_error("m_star requires at least 3 vertices");
  auto f = [n, m](int v, int e) { return Rational(m - e, n - v); };
  return extremize(h, f, false, 2, n - 1);
}

Rational x_star(const Graph& h) {
  if (h.edge_count() == 0 || h.vertex_count() < 3)
    throw std::domain_error("x_star requires a nonempty graph on >= 3 vertices");
  Rational ms = m_star(h).value;
  return ms / (Rational(h.edge_count()) - ms * Rational(h.vertex_count() - 2));
}

namespace {

void check_ab(const Rational& a, const Rational& b) {
  if (a > Rational(1) || b >= Rational(2))
    throw std::invalid_argument("d_ab requires a <= 1 and b < 2");
}

}  // namespace

Rational d_ab(const Graph& h, const Rational& a, const Rational& b) {
  check_ab(a, b);
  if (h.edge_count() == 0) return Rational(0);
  return (Rational(h.edge_count()) - a) / (Rational(h.vertex_count()) - b);
}

DensityReport m_ab(const Graph& h, const Rational& a, const Rational& b) {
  check_ab(a, b);
  check_subgraph_cap(h);
  auto f = [&a, &b](int v, int e) {
    if (e == 0) return Rational(0);
    return (Rational(e) - a) / (Rational(v) - b);
  };
  return extremize(h, f, true, 0, h.vertex_count());
}

bool is_2_balanced(const Graph& h) { return m2(h).value == d2(h); }

bool is_strictly_2_balanced(const Graph& h) {
  if (!is_2_balanced(h)) return false;
  return strictly_dominates(h, d2_counts, d2(h));
}

bool is_balanced_wrt(const Graph& g, const Graph& h) {
  return m2_asym(g, h).value == d2_asym(g, h);
}

bool is_strictly_balanced_wrt(const Graph& g, const Graph& h) {
  if (!is_balanced_wrt(g, h)) return false;
  if (g.edge_count() == 0) return false;  // measure identically zero
  Rational inv = m2(g).value.inverse();
  auto f = [&inv](int v, int e) {
    if (e == 0) return Rational(0);
    return Rational(e) / (Rational(v - 2) + inv);
  };
  return strictly_dominates(h, f, d2_asym(g, h));
}

bool is_balanced_ab(const Graph& h, const Rational& a, const Rational& b) {
  return m_ab(h, a, b).value == d_ab(h, a, b);
}

bool is_strictly_balanced_ab(const Graph& h, const Rational& a,
                             const Rational& b) {
  if (!is_balanced_ab(h, a, b)) return false;
  auto f = [&a, &b](int v, int e) {
    if (e == 0) return Rational(0);
    return (Rational(e) - a) / (Rational(v) - b);
  };
  return strictly_dominates(h, f, d_ab(h, a, b));
}

Rational threshold_exponent(const Graph& g, const Graph& h) {
  if (g.edge_count() == 0 || h.edge_count() == 0)
    throw std::invalid_argument("threshold exponent needs nonempty graphs");
  return -(m2_asym(g, h).value.inverse());
}

BalancednessBundle balancedness(const std::optional<Graph>& g, const Graph& h,
                                const std::optional<Rational>& a,
                                const std::optional<Rational>& b) {
  BalancednessBundle out;
  out.two_balanced = is_2_balanced(h);
  out.strictly_two_balanced = is_strictly_2_balanced(h);
  if (g) {
    out.balanced_wrt_g = is_balanced_wrt(*g, h);
    out.strictly_balanced_wrt_g = is_strictly_balanced_wrt(*g, h);
  }
  if (a && b) {
    out.balanced_ab = is_balanced_ab(h, *a, *b);
    out.strictly_balanced_ab = is_strictly_balanced_ab(h, *a, *b);
  }
  return out;
}

}  // namespace ramsey
