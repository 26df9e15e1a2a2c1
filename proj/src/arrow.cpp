#include "ramsey/arrow.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/cdcl.hpp"

namespace ramsey {

EdgeSet h_edges(const Graph& a, const Graph& h) {
  EdgeSet out;
  if (h.vertex_count() > a.vertex_count() || h.edge_count() == 0) return out;
  std::vector<char> mark(static_cast<size_t>(a.vertex_count()) *
                             a.vertex_count(),
                         0);
  for (const EdgeSet& copy : enumerate_copy_edge_sets(a, h.core()))
    for (const Edge& e : copy) mark[e.u * a.vertex_count() + e.v] = 1;
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = u + 1; v < a.vertex_count(); ++v)
      if (mark[u * a.vertex_count() + v]) out.push_back(Edge(u, v));
  return out;
}

namespace {

struct Copy {
  int color;
  int remaining;   // unassigned edges; alive copies never see an off-color edge
  bool dead;
  std::vector<int> edges;
};

struct BudgetExceeded {};

// DPLL-style search over edge colorings with per-copy counters: a copy whose
// edges are all colored its own color is a conflict; a live copy reduced to
// one unassigned edge forbids its color on that edge.
class ComponentSolver {
 public:
  ComponentSolver(int num_colors, std::vector<Copy> copies, int num_edges,
                  uint64_t budget, uint64_t& nodes)
      : k_(num_colors),
        copies_(std::move(copies)),
        edge_copies_(num_edges),
        assignment_(num_edges, -1),
        forbidden_(num_edges, 0),
        budget_(budget),
        nodes_(nodes) {
    for (size_t ci = 0; ci < copies_.size(); ++ci)
      for (int e : copies_[ci].edges)
        edge_copies_[e].push_back(static_cast<int>(ci));
    order_.resize(num_edges);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return edge_copies_[a].size() > edge_copies_[b].size();
    });
  }

  // Returns true when a valid coloring exists (copied into `out`).
  bool solve(std::vector<int8_t>& out) {
    if (!dfs(0)) return false;
    out = assignment_;
    return true;
  }

 private:
  struct TrailEntry {
    enum Kind : uint8_t { kAssign, kDead, kDecrement, kForbid } kind;
    int idx;
    uint8_t color;  // for kForbid
  };

  bool dfs(size_t pos) {
    while (pos < order_.size() && assignment_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) return true;
    int e = order_[pos];
    for (int c = 0; c < k_; ++c) {
      if ((forbidden_[e] >> c) & 1) continue;
      if (++nodes_ > budget_) throw BudgetExceeded{};
      size_t mark = trail_.size();
      if (propagate(e, c) && dfs(pos + 1)) return true;
      rollback(mark);
    }
    return false;
  }

  // Assigns e := c and runs forced consequences. False on conflict.
  bool propagate(int root_edge, int root_color) {
    pending_.clear();
    pending_.emplace_back(root_edge, root_color);
    for (size_t i = 0; i < pending_.size(); ++i) {
      auto [e, c] = pending_[i];
      if (assignment_[e] >= 0) {
        if (assignment_[e] == c) continue;
        return false;
      }
      if ((forbidden_[e] >> c) & 1) return false;
      assignment_[e] = static_cast<int8_t>(c);
      trail_.push_back({TrailEntry::kAssign, e, 0});
      for (int ci : edge_copies_[e]) {
        Copy& copy = copies_[ci];
        if (copy.dead) continue;
        if (copy.color != c) {
          copy.dead = true;
          trail_.push_back({TrailEntry::kDead, ci, 0});
          continue;
        }
        --copy.remaining;
        trail_.push_back({TrailEntry::kDecrement, ci, 0});
        if (copy.remaining == 0) return false;  // monochromatic copy
        if (copy.remaining == 1) {
          int f = -1;
          for (int cand : copy.edges)
            if (assignment_[cand] < 0) {
              f = cand;
              break;
            }
          if (!forbid(f, copy.color)) return false;
        }
      }
    }
    return true;
  }

  bool forbid(int e, int color) {
    if (assignment_[e] >= 0) return assignment_[e] != color;
    if ((forbidden_[e] >> color) & 1) return true;
    forbidden_[e] |= uint8_t(1) << color;
    trail_.push_back(
        {TrailEntry::kForbid, e, static_cast<uint8_t>(color)});
    int open = k_ - __builtin_popcount(forbidden_[e]);
    if (open == 0) return false;
    if (open == 1) {
      int free_color = __builtin_ctz(~forbidden_[e] & ((1u << k_) - 1));
      pending_.emplace_back(e, free_color);
    }
    return true;
  }

  void rollback(size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry& t = trail_.back();
      switch (t.kind) {
        case TrailEntry::kAssign:
          assignment_[t.idx] = -1;
          break;
        case TrailEntry::kDead:
          copies_[t.idx].dead = false;
          break;
        case TrailEntry::kDecrement:
          ++copies_[t.idx].remaining;
          break;
        case TrailEntry::kForbid:
          forbidden_[t.idx] &= ~(uint8_t(1) << t.color);
          break;
      }
      trail_.pop_back();
    }
  }

  int k_;
  std::vector<Copy> copies_;
  std::vector<std::vector<int>> edge_copies_;
  std::vector<int8_t> assignment_;
  std::vector<uint8_t> forbidden_;
  std::vector<int> order_;
  std::vector<TrailEntry> trail_;
  std::vector<std::pair<int, int>> pending_;
  uint64_t budget_;
  uint64_t& nodes_;
};

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Two-color components are plain CNF over one boolean per edge (true = the
// first color): a copy of target 0 yields an all-negative clause, a copy of
// target 1 an all-positive one. CDCL handles the near-threshold instances
// that blow up under plain DFS.
enum class ComponentOutcome { kSat, kUnsat, kBudget };

ComponentOutcome solve_two_color_component(const std::vector<Copy>& copies,
                                           int num_edges, uint64_t budget,
                                           uint64_t& nodes,
                                           std::vector<int8_t>& solution) {
  CdclSolver solver(num_edges);
  std::vector<int> clause;
  for (const Copy& copy : copies) {
    clause.clear();
    for (int e : copy.edges)
      clause.push_back(copy.color == 0 ? -(e + 1) : (e + 1));
    solver.add_clause(clause);
  }
  CdclSolver::Result res = solver.solve(budget);
  nodes += solver.decisions() + solver.conflicts();
  if (res == CdclSolver::Result::kUnknown) return ComponentOutcome::kBudget;
  if (res == CdclSolver::Result::kUnsat) return ComponentOutcome::kUnsat;
  solution.assign(static_cast<size_t>(num_edges), 1);
  for (int v = 1; v <= num_edges; ++v)
    if (solver.model_value(v)) solution[static_cast<size_t>(v - 1)] = 0;
  for (const Copy& copy : copies) {
    bool mono = true;
    for (int e : copy.edges)
      if (solution[static_cast<size_t>(e)] != copy.color) {
        mono = false;
        break;
      }
    if (mono) throw std::logic_error("CDCL model violates a copy constraint");
  }
  return ComponentOutcome::kSat;
}

}  // namespace

ArrowResult arrow_decide(const Graph& f, const std::vector<Graph>& targets,
                         const ArrowOptions& options) {
  int k = static_cast<int>(targets.size());
  if (k < 2 || k > 8)
    throw std::invalid_argument("arrow needs between 2 and 8 targets");
  if (options.restrict_to_h_edges && k != 2)
    throw std::invalid_argument("H-edge restriction is a two-color reduction");

  ArrowResult result;
  result.nodes_explored = 0;

  // An edgeless target that fits in the host is monochromatic vacuously.
  for (const Graph& t : targets)
    if (t.edge_count() == 0 && t.vertex_count() <= f.vertex_count()) {
      result.status = ArrowStatus::kArrow;
      return result;
    }

  EdgeSet domain = options.restrict_to_h_edges ? h_edges(f, targets[1])
                                               : f.edges();
  int m = static_cast<int>(domain.size());
  Graph domain_graph(f.vertex_count());
  for (const Edge& e : domain) domain_graph.add_edge(e.u, e.v);

  // copies of each target whose edges lie in the domain
  std::vector<Copy> copies;
  for (int c = 0; c < k; ++c) {
    const Graph& t = targets[c];
    if (t.vertex_count() > f.vertex_count() || t.edge_count() == 0) continue;
    for (const EdgeSet& copy : enumerate_copy_edge_sets(domain_graph, t.core())) {
      Copy entry;
      entry.color = c;
      entry.dead = false;
      for (const Edge& e : copy) {
        auto it = std::lower_bound(domain.begin(), domain.end(), e);
        entry.edges.push_back(static_cast<int>(it - domain.begin()));
      }
      entry.remaining = static_cast<int>(entry.edges.size());
      copies.push_back(std::move(entry));
    }
  }

  // Kernelization: an edge outside every copy of some color can safely take
  // that color; copies of other colors through it die. Iterate to fixpoint.
  std::vector<int8_t> fixed(m, -1);
  std::vector<std::vector<int>> copy_count(k, std::vector<int>(m, 0));
  std::vector<std::vector<int>> edge_copies(m);
  std::vector<char> dead(copies.size(), 0);
  for (size_t ci = 0; ci < copies.size(); ++ci)
    for (int e : copies[ci].edges) {
      ++copy_count[copies[ci].color][e];
      edge_copies[e].push_back(static_cast<int>(ci));
    }
  std::vector<int> work;
  for (int e = 0; e < m; ++e) work.push_back(e);
  while (!work.empty()) {
    int e = work.back();
    work.pop_back();
    if (fixed[e] >= 0) continue;
    int safe = -1;
    for (int c = 0; c < k; ++c)
      if (copy_count[c][e] == 0) {
        safe = c;
        break;
      }
    if (safe < 0) continue;
    fixed[e] = static_cast<int8_t>(safe);
    for (int ci : edge_copies[e]) {
      if (dead[ci]) continue;
      dead[ci] = 1;
      for (int other : copies[ci].edges) {
        if (--copy_count[copies[ci].color][other] == 0 && fixed[other] < 0)
          work.push_back(other);
      }
    }
  }

  // split live copies into connected components over shared edges
  DisjointSets dsu(m);
  for (size_t ci = 0; ci < copies.size(); ++ci) {
    if (dead[ci]) continue;
    const auto& es = copies[ci].edges;
    for (size_t i = 1; i < es.size(); ++i) dsu.unite(es[0], es[i]);
  }
  std::vector<std::vector<int>> component_copies;  // live copies by component
  {
    std::vector<int> roots(m, -1);
    for (size_t ci = 0; ci < copies.size(); ++ci) {
      if (dead[ci]) continue;
      int root = dsu.find(copies[ci].edges[0]);
      if (roots[root] < 0) {
        roots[root] = static_cast<int>(component_copies.size());
        component_copies.emplace_back();
      }
      component_copies[roots[root]].push_back(static_cast<int>(ci));
    }
  }

  std::vector<int8_t> final_colors(m, -1);
  for (int e = 0; e < m; ++e)
    if (fixed[e] >= 0) final_colors[e] = fixed[e];

  bool unknown = false;
  for (const auto& comp : component_copies) {
    // local edge ids
    std::vector<int> local_edges;
    std::vector<int> local_id(m, -1);
    std::vector<Copy> local_copies;
    for (int ci : comp) {
      Copy local = copies[ci];
      for (int& e : local.edges) {
        if (local_id[e] < 0) {
          local_id[e] = static_cast<int>(local_edges.size());
          local_edges.push_back(e);
        }
        e = local_id[e];
      }
      local_copies.push_back(std::move(local));
    }
    std::vector<int8_t> local_solution;
    bool sat;
    if (k == 2 && !options.use_reference_dfs) {
      ComponentOutcome outcome = solve_two_color_component(
          local_copies, static_cast<int>(local_edges.size()),
          options.node_budget, result.nodes_explored, local_solution);
      if (outcome == ComponentOutcome::kBudget) {
        unknown = true;
        break;
      }
      sat = outcome == ComponentOutcome::kSat;
    } else {
      ComponentSolver solver(k, std::move(local_copies),
                             static_cast<int>(local_edges.size()),
                             options.node_budget, result.nodes_explored);
      try {
        sat = solver.solve(local_solution);
      } catch (const BudgetExceeded&) {
        unknown = true;
        break;
      }
    }
    if (!sat) {
      result.status = ArrowStatus::kArrow;
      return result;
    }
    for (size_t i = 0; i < local_edges.size(); ++i)
      final_colors[local_edges[i]] = local_solution[i];
  }
  if (unknown) {
    result.status = ArrowStatus::kUnknown;
    return result;
  }

  // leftover edges: not in any copy of any color, kernel never reached them
  // only if m == 0 paths; default them to the last color
  for (int e = 0; e < m; ++e)
    if (final_colors[e] < 0) final_colors[e] = static_cast<int8_t>(k - 1);

  result.status = ArrowStatus::kNoArrow;
  Coloring witness;
  witness.n = f.vertex_count();
  witness.num_colors = k;
  witness.domain = domain;
  witness.colors = std::move(final_colors);
  witness.off_domain_color = k - 1;
  result.witness = std::move(witness);
  return result;
}

bool verify_coloring(const Graph& f, const std::vector<Graph>& targets,
                     const Coloring& c) {
  for (size_t i = 0; i < targets.size(); ++i) {
    const Graph& t = targets[i];
    if (t.vertex_count() > f.vertex_count()) continue;
    if (t.edge_count() == 0) return false;  // vacuously monochromatic
    Graph cls = c.color_class(f, static_cast<int>(i));
    if (count_copies(cls, t) > 0) return false;
  }
  return true;
}

}  // namespace ramsey
