#include "ramsey/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ramsey/arrow.hpp"
#include "ramsey/canon.hpp"

namespace ramsey {

Graph sample_gnp(int n, double p, const RngSpec& rng) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("edge probability must be in [0,1]");
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (counter_uniform(rng, pair_index(u, v)) < p) g.add_edge(u, v);
  return g;
}

std::pair<double, double> two_round_split(double p, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("p must be in [0,1]");
  double p1 = alpha * p;
  double p2 = p1 >= 1.0 ? 0.0 : (p - p1) / (1.0 - p1);
  return {p1, p2};
}

std::pair<Rational, Rational> two_round_split_exact(const Rational& p,
                                                    const Rational& alpha) {
  if (!(alpha > Rational(0) && alpha < Rational(1)))
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument("p must be in [0,1]");
  Rational p1 = alpha * p;
  Rational p2 =
      p1 == Rational(1) ? Rational(0) : (p - p1) / (Rational(1) - p1);
  return {p1, p2};
}

namespace {

long long binom2(long long k) { return k * (k - 1) / 2; }

struct SubsetSearch {
  const Graph& f;
  int target_size;
  std::vector<int> order;  // vertices, low degree first
  std::vector<int> chosen;
  std::vector<int> best_set;
  long long best_edges;

  // admissible bound: each remaining pick costs at least its current edge
  // count into the chosen set
  void dfs(size_t pos, long long current) {
    if (static_cast<int>(chosen.size()) == target_size) {
      if (current < best_edges) {
        best_edges = current;
        best_set = chosen;
      }
      return;
    }
    int needed = target_size - static_cast<int>(chosen.size());
    if (pos + static_cast<size_t>(needed) > order.size()) return;
    if (current >= best_edges) return;

    std::vector<long long> costs;
    uint64_t chosen_mask = 0;
    for (int v : chosen) chosen_mask |= 1ULL << v;
    for (size_t i = pos; i < order.size(); ++i)
      costs.push_back(
          __builtin_popcountll(f.neighbors(order[i]) & chosen_mask));
    std::partial_sort(costs.begin(), costs.begin() + needed, costs.end());
    long long bound = current;
    for (int i = 0; i < needed; ++i) bound += costs[static_cast<size_t>(i)];
    if (bound >= best_edges) return;

    int v = order[pos];
    long long added = __builtin_popcountll(f.neighbors(v) & chosen_mask);
    chosen.push_back(v);
    dfs(pos + 1, current + added);
    chosen.pop_back();
    dfs(pos + 1, current);
  }
};

}  // namespace

DensenessVerdict is_rho_d_dense(const Graph& f, const Rational& rho,
                                const Rational& d, DensenessMode mode,
                                bool literal_denominator, const RngSpec& rng) {
  if (!(rho > Rational(0)) || !(d > Rational(0)) || d > Rational(1))
    throw std::invalid_argument("need rho > 0 and 0 < d <= 1");
  int n = f.vertex_count();
  // ceil(rho * n)
  Rational rn = rho * Rational(n);
  long long subset_size = (rn.num() + rn.den() - 1) / rn.den();
  DensenessVerdict verdict;
  verdict.exact = (mode == DensenessMode::kExact);
  if (subset_size > n) {  // no qualifying sets
    verdict.dense = true;
    return verdict;
  }
  Rational required_exact =
      d * Rational(literal_denominator ? binom2(n) : binom2(subset_size));
  // smallest integer count that satisfies "e >= required"
  long long required =
      (required_exact.num() + required_exact.den() - 1) / required_exact.den();
  verdict.required_edges = required;
  if (required <= 0) {
    verdict.dense = true;
    return verdict;
  }

  if (mode == DensenessMode::kExact) {
    if (n > 30)
      throw std::invalid_argument("exact denseness check capped at 30 vertices");
    SubsetSearch search{f, static_cast<int>(subset_size), {}, {}, {},
                        binom2(subset_size) + 1};
    search.order.resize(n);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
      if (f.degree(a) != f.degree(b)) return f.degree(a) < f.degree(b);
      return a < b;
    });
    search.dfs(0, 0);
    verdict.witness_edges = search.best_edges;
    verdict.dense = search.best_edges >= required;
    if (!verdict.dense) {
      std::sort(search.best_set.begin(), search.best_set.end());
      verdict.violating_set = search.best_set;
    }
    return verdict;
  }

  // falsify mode: random restarts + greedy swaps; can only ever report a
  // found violation, never certify denseness
  CounterRng stream(rng);
  long long best_seen = binom2(subset_size) + 1;
  std::vector<int> best_set;
  for (int restart = 0; restart < 80; ++restart) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(pool[static_cast<size_t>(i)],
                pool[stream.next_below(static_cast<uint64_t>(i + 1))]);
    std::vector<int> set(pool.begin(), pool.begin() + subset_size);
    uint64_t mask = 0;
    for (int v : set) mask |= 1ULL << v;
    auto edges_of = [&](uint64_t m) {
      return static_cast<long long>(f.induced_edge_count(m));
    };
    long long cur = edges_of(mask);
    bool improved = true;
    while (improved && cur >= required) {
      improved = false;
      for (int out_v : set) {
        for (int in_v = 0; in_v < n && !improved; ++in_v) {
          if (mask & (1ULL << in_v)) continue;
          uint64_t next = (mask & ~(1ULL << out_v)) | (1ULL << in_v);
          long long e = edges_of(next);
          if (e < cur) {
            mask = next;
            cur = e;
            improved = true;
          }
        }
        if (improved) break;
      }
      if (improved) {
        set.clear();
        uint64_t bits = mask;
        while (bits) {
          set.push_back(__builtin_ctzll(bits));
          bits &= bits - 1;
        }
      }
    }
    if (cur < best_seen) {
      best_seen = cur;
      best_set = set;
    }
    if (cur < required) break;
  }
  verdict.witness_edges = best_seen;
  if (best_seen < required) {
    std::sort(best_set.begin(), best_set.end());
    verdict.violating_set = best_set;
    verdict.dense = false;
  } else {
    verdict.dense = true;  // "no violation found"
  }
  return verdict;
}

namespace {

// conflict adjacency via shared-edge buckets
std::vector<std::vector<int>> conflict_lists(const std::vector<EdgeSet>& copies,
                                             int n, long long* edge_total) {
  std::vector<std::vector<int>> bucket(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < copies.size(); ++i)
    for (const Edge& e : copies[i])
      bucket[static_cast<size_t>(e.u) * n + e.v].push_back(
          static_cast<int>(i));
  std::vector<std::vector<int>> adj(copies.size());
  for (const auto& b : bucket)
    for (size_t x = 0; x < b.size(); ++x)
      for (size_t y = x + 1; y < b.size(); ++y) {
        adj[b[x]].push_back(b[y]);
        adj[b[y]].push_back(b[x]);
      }
  long long edges = 0;
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edges += static_cast<long long>(list.size());
  }
  if (edge_total) *edge_total = edges / 2;
  return adj;
}

}  // namespace

DisjointFamily disjoint_copies(const Graph& f, const Graph& h,
                               size_t copy_cap) {
  if (h.edge_count() == 0)
    throw std::invalid_argument("disjoint_copies needs a nonempty pattern");
  DisjointFamily out;
  std::vector<EdgeSet> copies;
  if (h.vertex_count() <= f.vertex_count())
    copies = enumerate_copy_edge_sets(f, h.core(), copy_cap, &out.truncated);
  out.conflict_nodes = static_cast<long long>(copies.size());
  if (copies.empty()) {
    out.turan_bound = 0;
    return out;
  }

  std::vector<std::vector<int>> adj =
      conflict_lists(copies, f.vertex_count(), &out.conflict_edges);
  long long v = out.conflict_nodes;
  long long denom = v + 2 * out.conflict_edges;
  out.turan_bound = (v * v + denom - 1) / denom;

  // repeatedly select a minimum-degree copy, drop it and its conflicts
  std::vector<int> degree(copies.size());
  std::vector<char> alive(copies.size(), 1);
  for (size_t i = 0; i < copies.size(); ++i)
    degree[i] = static_cast<int>(adj[i].size());
  size_t remaining = copies.size();
  while (remaining > 0) {
    int pick = -1;
    for (size_t i = 0; i < copies.size(); ++i)
      if (alive[i] && (pick < 0 || degree[i] < degree[static_cast<size_t>(pick)]))
        pick = static_cast<int>(i);
    out.copies.push_back(copies[static_cast<size_t>(pick)]);
    std::vector<int> removed;
    removed.push_back(pick);
    for (int nb : adj[static_cast<size_t>(pick)])
      if (alive[static_cast<size_t>(nb)]) removed.push_back(nb);
    for (int r : removed) {
      alive[static_cast<size_t>(r)] = 0;
      --remaining;
      for (int nb : adj[static_cast<size_t>(r)])
        if (alive[static_cast<size_t>(nb)]) --degree[static_cast<size_t>(nb)];
    }
  }
  return out;
}

JansonBound janson_lower_tail(const Graph& f, const Graph& h, double p,
                              double tail_delta) {
  if (tail_delta < 0.0 || tail_delta > 1.0)
    throw std::invalid_argument("delta must be in [0,1]");
  std::vector<EdgeSet> copies;
  if (h.vertex_count() <= f.vertex_count() && h.edge_count() > 0)
    copies = enumerate_copy_edge_sets(f, h.core());
  JansonBound out;
  out.copy_count = static_cast<long long>(copies.size());
  int eh = h.edge_count();
  out.mu = static_cast<double>(copies.size()) * std::pow(p, eh);

  // ordered conflicting pairs: p^{e_i + e_j - e(i cap j)}
  std::vector<std::vector<int>> adj =
      conflict_lists(copies, f.vertex_count(), nullptr);
  double delta_sum = 0;
  for (size_t i = 0; i < copies.size(); ++i) {
    for (int j : adj[i]) {
      const EdgeSet& a = copies[i];
      const EdgeSet& b = copies[static_cast<size_t>(j)];
      size_t shared = 0, x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          ++shared;
          ++x;
          ++y;
        } else if (a[x] < b[y]) {
          ++x;
        } else {
          ++y;
        }
      }
      delta_sum += std::pow(p, 2 * eh - static_cast<int>(shared));
    }
  }
  out.delta = delta_sum;
  if (out.mu <= 0.0) {
    out.bound = 1.0;
    return out;
  }
  out.bound = std::exp(-(tail_delta * tail_delta * out.mu * out.mu) /
                       (2.0 * (out.mu + out.delta)));
  return out;
}

double exact_copy_lower_tail(const Graph& f, const Graph& h, double p,
                             double fraction_of_mean) {
  int m = f.edge_count();
  if (m > 22)
    throw std::invalid_argument("exact tail enumeration capped at 22 edges");
  std::vector<EdgeSet> copies;
  if (h.vertex_count() <= f.vertex_count() && h.edge_count() > 0)
    copies = enumerate_copy_edge_sets(f, h.core());
  std::vector<Edge> edges = f.edges();
  std::vector<uint32_t> copy_masks;
  for (const EdgeSet& copy : copies) {
    uint32_t mask = 0;
    for (const Edge& e : copy) {
      size_t idx = static_cast<size_t>(
          std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
      mask |= 1u << idx;
    }
    copy_masks.push_back(mask);
  }
  double mu = static_cast<double>(copies.size()) * std::pow(p, h.edge_count());
  double threshold = fraction_of_mean * mu;

  double tail = 0;
  for (uint32_t subset = 0; subset < (1u << m); ++subset) {
    int present = __builtin_popcount(subset);
    long long count = 0;
    for (uint32_t mask : copy_masks)
      if ((subset & mask) == mask) ++count;
    if (static_cast<double>(count) <= threshold)
      tail += std::pow(p, present) * std::pow(1.0 - p, m - present);
  }
  return tail;
}

double ArrowPolynomial::eval(double p) const {
  double total = 0;
  for (int e = 0; e <= max_edges; ++e)
    total += static_cast<double>(counts[static_cast<size_t>(e)]) *
             std::pow(p, e) * std::pow(1.0 - p, max_edges - e);
  return total;
}

Rational ArrowPolynomial::eval_exact(const Rational& p) const {
  Rational total(0);
  Rational q = Rational(1) - p;
  for (int e = 0; e <= max_edges; ++e) {
    uint64_t c = counts[static_cast<size_t>(e)];
    if (c == 0) continue;
    total += Rational(static_cast<long long>(c)) *
             p.pow(static_cast<unsigned>(e)) *
             q.pow(static_cast<unsigned>(max_edges - e));
  }
  return total;
}

ArrowPolynomial exact_arrow_polynomial(const Graph& g, const Graph& h, int n) {
  if (n > 6)
    throw std::invalid_argument("exact arrow enumeration capped at n = 6");
  ArrowPolynomial poly;
  poly.n = n;
  poly.max_edges = n * (n - 1) / 2;
  poly.counts.assign(static_cast<size_t>(poly.max_edges) + 1, 0);

  std::vector<Edge> all_edges = Graph::complete(n).edges();
  IsoClassSet classes;
  std::vector<char> class_arrow;
  std::vector<Graph> targets_vec = {g, h};

  uint32_t top = 1u << poly.max_edges;
  for (uint32_t mask = 0; mask < top; ++mask) {
    Graph f(n);
    uint32_t bits = mask;
    while (bits) {
      int idx = __builtin_ctz(bits);
      bits &= bits - 1;
      f.add_edge(all_edges[static_cast<size_t>(idx)].u,
                 all_edges[static_cast<size_t>(idx)].v);
    }
    size_t cls = classes.find_or_insert(f);
    if (cls == class_arrow.size()) {
      ArrowResult r = arrow_decide(f, targets_vec);
      class_arrow.push_back(r.arrow() ? 1 : 0);
    }
    if (class_arrow[cls])
      ++poly.counts[static_cast<size_t>(__builtin_popcount(mask))];
  }
  return poly;
}

double exact_arrow_probability(const Graph& g, const Graph& h, int n,
                               double p) {
  return exact_arrow_polynomial(g, h, n).eval(p);
}

bool PropSpec::evaluate(const Graph& f) const {
  switch (kind) {
    case PropKind::kContainsCopy:
      return count_copies(f, pattern) >= 1;
    case PropKind::kEdgeCountAtMost:
      return f.edge_count() <= bound;
    case PropKind::kMaxDegreeAtMost:
      return f.max_degree() <= bound;
    case PropKind::kRhoDDense:
      return is_rho_d_dense(f, rho, dens, DensenessMode::kExact).dense;
    case PropKind::kCopyCountAtMost:
      return count_copies(f, pattern) <= static_cast<uint64_t>(bound);
  }
  throw std::logic_error("unreachable");
}

HarrisResult harris_check(const PropSpec& a, const PropSpec& b, int n,
                          const Rational& p) {
  if (n > 5)
    throw std::invalid_argument("exact Harris check capped at n = 5");
  if (a.increasing() != b.increasing())
    throw std::invalid_argument(
        "Harris needs two properties of the same monotone direction");
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument("p must be in [0,1]");

  int m = n * (n - 1) / 2;
  std::vector<Edge> all_edges = Graph::complete(n).edges();
  Rational q = Rational(1) - p;
  Rational pa(0), pb(0), joint(0);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    Graph f(n);
    uint32_t bits = mask;
    while (bits) {
      int idx = __builtin_ctz(bits);
      bits &= bits - 1;
      f.add_edge(all_edges[static_cast<size_t>(idx)].u,
                 all_edges[static_cast<size_t>(idx)].v);
    }
    int e = __builtin_popcount(mask);
    Rational weight = p.pow(static_cast<unsigned>(e)) *
                      q.pow(static_cast<unsigned>(m - e));
    bool in_a = a.evaluate(f);
    bool in_b = b.evaluate(f);
    if (in_a) pa += weight;
    if (in_b) pb += weight;
    if (in_a && in_b) joint += weight;
  }
  HarrisResult out;
  out.joint = joint;
  out.product = pa * pb;
  out.holds = joint >= out.product;
  return out;
}

}  // namespace ramsey
