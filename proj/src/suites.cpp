#include "ramsey/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "ramsey/amalgam.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/canon.hpp"
#include "ramsey/density.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/random_models.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["universe"] = universe;
  j["checks"] = checks;
  j["wall_seconds"] = wall_seconds;
  j["passed"] = passed();
  nlohmann::json fails = nlohmann::json::array();
  for (const SuiteFailure& f : failures) fails.push_back(f.description);
  j["failures"] = fails;
  return j.dump(2);
}

namespace {

struct Runner {
  SuiteReport report;
  std::mutex mu;

  void fail(const std::string& description) {
    std::lock_guard<std::mutex> lock(mu);
    report.failures.push_back({description});
  }
  void add_checks(uint64_t n) {
    std::lock_guard<std::mutex> lock(mu);
    report.checks += n;
  }
};

std::vector<Graph> nonempty_graphs(int max_vertices) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_universe(max_vertices, false))
    if (g.edge_count() > 0) out.push_back(g);
  return out;
}

std::string g6(const Graph& g) { return serialize_graph6(g); }

// ---- individual suites ----------------------------------------------------

void suite_identity(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 6;
  r.report.universe =
      "nonempty graphs on <= " + std::to_string(cap) + " vertices";
  for (const Graph& g : nonempty_graphs(cap)) {
    r.add_checks(1);
    Rational lhs = m2_asym(g, g).value;
    Rational rhs = m2(g).value;
    if (lhs != rhs)
      r.fail("identity: G=" + g6(g) + " m2(G,G)=" + lhs.str() +
             " m2(G)=" + rhs.str());
  }
}

void suite_sandwich(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 5;
  r.report.universe = "ordered nonempty pairs on <= " + std::to_string(cap) +
                      " vertices with m2(G) <= m2(H)";
  auto graphs = nonempty_graphs(cap);
  for (const Graph& g : graphs) {
    Rational mg = m2(g).value;
    for (const Graph& h : graphs) {
      Rational mh = m2(h).value;
      if (mg > mh) continue;
      r.add_checks(1);
      Rational mgh = m2_asym(g, h).value;
      bool ok = mg <= mgh && mgh <= mh;
      if (ok && Rational(0) < mg && mg < mh) ok = mg < mgh && mgh < mh;
      if (!ok)
        r.fail("sandwich: G=" + g6(g) + " H=" + g6(h) + " m2(G)=" + mg.str() +
               " m2(G,H)=" + mgh.str() + " m2(H)=" + mh.str());
    }
  }
}

void suite_equivalence(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 5;
  r.report.universe = "G nonempty, H nonempty with v_H >= 3, both <= " +
                      std::to_string(cap) + " vertices";
  auto graphs = nonempty_graphs(cap);
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      if (h.vertex_count() < 3) continue;
      r.add_checks(1);
      bool strictly = is_strictly_balanced_wrt(g, h);
      bool via_mstar = m2_asym(g, h).value < m_star(h).value;
      bool via_xstar = m2(g).value < x_star(h);
      if (strictly != via_mstar || via_mstar != via_xstar)
        r.fail("equivalence: G=" + g6(g) + " H=" + g6(h) +
               " strict=" + std::to_string(strictly) +
               " m2GH<m*=" + std::to_string(via_mstar) +
               " m2G<x*=" + std::to_string(via_xstar));
    }
  }
}

void suite_exponents(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 5;
  r.report.universe =
      "nonempty pairs on <= " + std::to_string(cap) + " vertices";
  auto graphs = nonempty_graphs(cap);
  for (const Graph& g : graphs) {
    Rational m2g = m2(g).value;
    Rational floor0 = Rational(2) - m2g.inverse();
    // exponent-0: v_I - e_I/m2(G) >= 2 - 1/m2(G) for I subgraph of G
    for_each_subgraph(g, SubgraphMode::kAll, 2,
                      [&](uint64_t mask, const EdgeSet& es) {
                        int v = __builtin_popcountll(mask);
                        Rational lhs = Rational(v) -
                                       Rational((long long)es.size()) / m2g;
                        if (lhs < floor0)
                          r.fail("exponent-0: G=" + g6(g) + " subgraph v=" +
                                 std::to_string(v) + " e=" +
                                 std::to_string(es.size()));
                        return true;
                      });
    if (is_2_balanced(g)) {
      Rational at_g = Rational(g.vertex_count()) -
                      Rational(g.edge_count()) / m2g;
      if (at_g != floor0)
        r.fail("exponent-0 equality: G=" + g6(g) + " balanced but lhs=" +
               at_g.str() + " floor=" + floor0.str());
    }
    for (const Graph& h : graphs) {
      r.add_checks(1);
      Rational m2gh = m2_asym(g, h).value;
      // exponent-1 over subgraphs of H
      for_each_subgraph(h, SubgraphMode::kAll, 2,
                        [&](uint64_t mask, const EdgeSet& es) {
                          int v = __builtin_popcountll(mask);
                          Rational lhs =
                              Rational(v) -
                              Rational((long long)es.size()) / m2gh;
                          if (lhs < floor0)
                            r.fail("exponent-1: G=" + g6(g) + " H=" + g6(h) +
                                   " subgraph v=" + std::to_string(v) +
                                   " e=" + std::to_string(es.size()));
                          return true;
                        });
      if (is_balanced_wrt(g, h)) {
        Rational at_h = Rational(h.vertex_count()) -
                        Rational(h.edge_count()) / m2gh;
        if (at_h != floor0)
          r.fail("exponent-1 equality: G=" + g6(g) + " H=" + g6(h) +
                 " balanced but lhs=" + at_h.str());
      }
      // exponent-2 chain
      long long vg = g.vertex_count(), eg = g.edge_count();
      long long vh = h.vertex_count(), eh = h.edge_count();
      Rational first = Rational(vg - 2 + (eg - 1) * (vh - 2)) -
                       Rational((eg - 1) * eh) / m2gh;
      Rational second = Rational(vg - 2) - Rational(eg - 1) / m2g;
      if (first < second || second < Rational(0))
        r.fail("exponent-2: G=" + g6(g) + " H=" + g6(h) + " first=" +
               first.str() + " second=" + second.str());
    }
  }
}

void suite_goalj(Runner& r, const SuiteCaps&) {
  r.report.universe =
      "G in {K3, C4, P2+K2}, H in {K3, C4}, every G_-, every amalgam";
  std::vector<Graph> gs = {
      Graph::complete(3), Graph::cycle(4),
      Graph::disjoint_union(Graph::path(2), Graph::complete(2))};
  std::vector<Graph> hs = {Graph::complete(3), Graph::cycle(4)};
  for (const Graph& g : gs) {
    for (const Graph& h : hs) {
      Rational m2gh = m2_asym(g, h).value;
      IsoClassSet minus_classes;
      for (const Edge& removed : g.edges()) {
        Graph g_minus = g;
        g_minus.remove_edge(removed.u, removed.v);
        size_t before = minus_classes.size();
        if (minus_classes.find_or_insert(g_minus) != before) continue;
        auto completions = completing_pairs(g, g_minus);
        for (const Amalgam& am : enumerate_amalgams(g_minus, h)) {
          Rational floor_l = Rational(2 - am.loss);
          for (const Edge& comp : completions) {
            Edge target(am.central.map[comp.u], am.central.map[comp.v]);
            uint64_t both = (1ULL << target.u) | (1ULL << target.v);
            uint64_t top = 1ULL << am.graph.vertex_count();
            uint64_t local_checks = 0;
            for (uint64_t mask = 0; mask < top; ++mask) {
              if ((mask & both) != both) continue;
              ++local_checks;
              int v = __builtin_popcountll(mask);
              int e = am.graph.induced_edge_count(mask);
              Rational lhs = Rational(v) - Rational(e) / m2gh;
              if (lhs < floor_l)
                r.fail("goalJ: G=" + g6(g) + " H=" + g6(h) + " amalgam=" +
                       g6(am.graph) + " pair=(" + std::to_string(target.u) +
                       "," + std::to_string(target.v) + ") J mask=" +
                       std::to_string(mask));
            }
            r.add_checks(local_checks);
          }
        }
      }
    }
  }
}

void suite_least_frequent(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 6;
  r.report.universe = "graphs H with 3 <= v <= " + std::to_string(cap) +
                      ", m*(H) > 0, all subgraphs with v_J >= 2";
  for (const Graph& h : enumerate_universe(cap, false)) {
    if (h.vertex_count() < 3) continue;
    Rational ms = m_star(h).value;
    if (ms.is_zero()) continue;
    Rational rhs = Rational(h.vertex_count()) - Rational(h.edge_count()) / ms;
    uint64_t local = 0;
    for_each_subgraph(h, SubgraphMode::kAll, 2,
                      [&](uint64_t mask, const EdgeSet& es) {
                        ++local;
                        Rational lhs =
                            Rational(__builtin_popcountll(mask)) -
                            Rational((long long)es.size()) / ms;
                        if (lhs < rhs)
                          r.fail("least-frequent: H=" + g6(h) + " mask=" +
                                 std::to_string(mask) + " e=" +
                                 std::to_string(es.size()));
                        return true;
                      });
    r.add_checks(local);
  }
}

void suite_mpq(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 6;
  r.report.universe = "graphs H with 3 <= v <= " + std::to_string(cap) +
                      " by (a,b) grid, a <= 1, b < 2";
  std::vector<Rational> as = {Rational(-2), Rational(-1), Rational(-1, 2),
                              Rational(0),  Rational(1, 2), Rational(1)};
  std::vector<Rational> bs = {Rational(-2),   Rational(-1), Rational(0),
                              Rational(1, 2), Rational(1),  Rational(3, 2),
                              Rational(7, 4)};
  for (const Graph& h : enumerate_universe(cap, false)) {
    if (h.vertex_count() < 3) continue;
    Rational ms = m_star(h).value;
    for (const Rational& a : as) {
      for (const Rational& b : bs) {
        r.add_checks(1);
        Rational dab = d_ab(h, a, b);
        Rational mab = m_ab(h, a, b).value;
        bool balanced = is_balanced_ab(h, a, b);
        bool strict = is_strictly_balanced_ab(h, a, b);
        if (balanced != (ms >= dab) || balanced != (ms >= mab) ||
            strict != (ms > dab) || strict != (ms > mab))
          r.fail("mpq: H=" + g6(h) + " a=" + a.str() + " b=" + b.str() +
                 " balanced=" + std::to_string(balanced) + " strict=" +
                 std::to_string(strict) + " m*=" + ms.str() + " d_ab=" +
                 dab.str() + " m_ab=" + mab.str());
      }
    }
  }
}

void suite_ratios(Runner& r, const SuiteCaps& caps) {
  uint64_t instances = caps.random_instances ? caps.random_instances : 10000;
  r.report.universe = std::to_string(instances) +
                      " random rational instances with b > d > 0";
  CounterRng rng(RngSpec{caps.seed, 101, 0});
  for (uint64_t i = 0; i < instances; ++i) {
    r.add_checks(1);
    auto small = [&](long long span) {
      return Rational(static_cast<long long>(rng.next_below(2 * span + 1)) -
                          span,
                      1 + static_cast<long long>(rng.next_below(9)));
    };
    Rational a = small(20), c = small(20);
    Rational d = Rational(1 + static_cast<long long>(rng.next_below(40)),
                          1 + static_cast<long long>(rng.next_below(9)));
    Rational b = d + Rational(1 + static_cast<long long>(rng.next_below(40)),
                              1 + static_cast<long long>(rng.next_below(9)));
    bool weak_lhs = c / d <= a / b;
    bool weak_rhs = (a - c) / (b - d) >= a / b;
    bool strict_lhs = c / d < a / b;
    bool strict_rhs = (a - c) / (b - d) > a / b;
    if (weak_lhs != weak_rhs || strict_lhs != strict_rhs)
      r.fail("ratios: a=" + a.str() + " b=" + b.str() + " c=" + c.str() +
             " d=" + d.str());
  }
}

void suite_harris(Runner& r, const SuiteCaps&) {
  r.report.universe =
      "catalog x catalog (same direction), n in {4,5}, p in {1/4,1/2,3/4}";
  std::vector<PropSpec> increasing = {
      {PropKind::kContainsCopy, Graph::complete(3), 0, {}, {}},
      {PropKind::kContainsCopy, Graph::complete(2), 0, {}, {}},
      {PropKind::kContainsCopy, Graph::cycle(4), 0, {}, {}},
      {PropKind::kRhoDDense, Graph(), 0, Rational(1, 2), Rational(1, 3)},
  };
  std::vector<PropSpec> decreasing = {
      {PropKind::kEdgeCountAtMost, Graph(), 2, {}, {}},
      {PropKind::kEdgeCountAtMost, Graph(), 5, {}, {}},
      {PropKind::kMaxDegreeAtMost, Graph(), 2, {}, {}},
      {PropKind::kCopyCountAtMost, Graph::complete(3), 0, {}, {}},
      {PropKind::kCopyCountAtMost, Graph::complete(2), 4, {}, {}},
  };
  std::vector<Rational> ps = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  auto run_catalog = [&](const std::vector<PropSpec>& catalog,
                         const char* label) {
    for (size_t i = 0; i < catalog.size(); ++i)
      for (size_t j = 0; j < catalog.size(); ++j)
        for (int n : {4, 5})
          for (const Rational& p : ps) {
            r.add_checks(1);
            HarrisResult res = harris_check(catalog[i], catalog[j], n, p);
            if (!res.holds)
              r.fail(std::string("harris(") + label + "): i=" +
                     std::to_string(i) + " j=" + std::to_string(j) + " n=" +
                     std::to_string(n) + " p=" + p.str() + " joint=" +
                     res.joint.str() + " product=" + res.product.str());
          }
  };
  run_catalog(increasing, "increasing");
  run_catalog(decreasing, "decreasing");
}

void suite_janson(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 5;
  r.report.universe = "F over graphs <= " + std::to_string(cap) +
                      " vertices, H=K3, p and delta grids";
  Graph k3 = Graph::complete(3);
  for (const Graph& f : enumerate_universe(cap, false)) {
    for (double p : {0.3, 0.5, 0.7}) {
      for (double delta : {0.25, 0.5, 1.0}) {
        r.add_checks(1);
        JansonBound jb = janson_lower_tail(f, k3, p, delta);
        double exact = exact_copy_lower_tail(f, k3, p, 1.0 - delta);
        if (jb.bound < exact - 1e-12)
          r.fail("janson: F=" + g6(f) + " p=" + std::to_string(p) +
                 " delta=" + std::to_string(delta) + " bound=" +
                 std::to_string(jb.bound) + " exact=" + std::to_string(exact));
      }
    }
  }
}

void suite_turan(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 7;
  r.report.universe = "F over graphs <= " + std::to_string(cap) +
                      " vertices, H in {K3, C4, P2}";
  std::vector<Graph> patterns = {Graph::complete(3), Graph::cycle(4),
                                 Graph::path(2)};
  auto universe = enumerate_universe(cap, false);
  parallel_for(universe.size(), [&](size_t idx) {
    const Graph& f = universe[idx];
    for (const Graph& h : patterns) {
      r.add_checks(1);
      DisjointFamily fam = disjoint_copies(f, h);
      bool disjoint = true;
      std::map<Edge, int> seen;
      for (const EdgeSet& copy : fam.copies)
        for (const Edge& e : copy)
          if (++seen[e] > 1) disjoint = false;
      if (!disjoint ||
          static_cast<long long>(fam.copies.size()) < fam.turan_bound)
        r.fail("turan: F=" + g6(f) + " H=" + g6(h) + " family=" +
               std::to_string(fam.copies.size()) + " bound=" +
               std::to_string(fam.turan_bound) +
               (disjoint ? "" : " (overlap!)"));
    }
  });
}

void suite_arrow_reduction(Runner& r, const SuiteCaps& caps) {
  int cap = caps.max_vertices ? caps.max_vertices : 7;
  r.report.universe = "hosts <= " + std::to_string(cap) +
                      " vertices, pairs (K3,K3), (K3,K4), (P2,K3)";
  std::vector<std::vector<Graph>> pairs = {
      {Graph::complete(3), Graph::complete(3)},
      {Graph::complete(3), Graph::complete(4)},
      {Graph::path(2), Graph::complete(3)},
  };
  auto universe = enumerate_universe(cap, false);
  parallel_for(universe.size(), [&](size_t idx) {
    const Graph& f = universe[idx];
    for (const auto& targets : pairs) {
      r.add_checks(1);
      ArrowOptions full;
      ArrowOptions restricted;
      restricted.restrict_to_h_edges = true;
      ArrowResult a = arrow_decide(f, targets, full);
      ArrowResult b = arrow_decide(f, targets, restricted);
      bool ok = a.status == b.status && a.status != ArrowStatus::kUnknown;
      if (ok && a.witness && !verify_coloring(f, targets, *a.witness))
        ok = false;
      if (ok && b.witness && !verify_coloring(f, targets, *b.witness))
        ok = false;
      if (!ok)
        r.fail("arrow-reduction: F=" + g6(f) + " G=" + g6(targets[0]) +
               " H=" + g6(targets[1]) + " full=" +
               std::to_string(static_cast<int>(a.status)) + " restricted=" +
               std::to_string(static_cast<int>(b.status)));
    }
  });
}

using SuiteFn = std::function<void(Runner&, const SuiteCaps&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"equivalence", suite_equivalence},
      {"sandwich", suite_sandwich},
      {"identity", suite_identity},
      {"exponents", suite_exponents},
      {"goalJ", suite_goalj},
      {"least_frequent", suite_least_frequent},
      {"mpq", suite_mpq},
      {"ratios", suite_ratios},
      {"harris", suite_harris},
      {"janson", suite_janson},
      {"turan", suite_turan},
      {"arrow_reduction", suite_arrow_reduction},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteCaps& caps) {
  for (const auto& [key, fn] : registry()) {
    if (key != name) continue;
    Runner runner;
    runner.report.name = name;
    auto t0 = std::chrono::steady_clock::now();
    fn(runner, caps);
    runner.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::sort(runner.report.failures.begin(), runner.report.failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) {
                return a.description < b.description;
              });
    return std::move(runner.report);
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace ramsey
