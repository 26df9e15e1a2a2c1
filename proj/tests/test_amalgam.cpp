#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramsey/amalgam.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/canon.hpp"
#include "ramsey/density.hpp"

using namespace ramsey;

namespace {

// two edge-disjoint triangles hanging off the middle vertex of a path u-v-w
Graph bowtie_path() {
  Graph g(5);
  g.add_edge(0, 1);  // u-v
  g.add_edge(1, 2);  // v-w
  g.add_edge(0, 3);
  g.add_edge(1, 3);  // triangle u,v,3
  g.add_edge(1, 4);
  g.add_edge(2, 4);  // triangle v,w,4
  return g;
}

}  // namespace

TEST_CASE("amalgams of K2 with H are H itself") {
  for (const Graph& h :
       {Graph::complete(3), Graph::cycle(4), Graph::complete(4), Graph::path(3)}) {
    auto types = enumerate_amalgams(Graph::complete(2), h);
    REQUIRE(types.size() == 1);
    CHECK(isomorphic(types[0].graph, h));
    CHECK(types[0].loss == 0);
  }
}

TEST_CASE("amalgams of P2 with K3: exactly the bowtie") {
  auto types = enumerate_amalgams(Graph::path(2), Graph::complete(3));
  REQUIRE(types.size() == 1);
  CHECK(types[0].graph.vertex_count() == 5);
  CHECK(types[0].graph.edge_count() == 6);
  CHECK(types[0].loss == 0);
  CHECK(isomorphic(types[0].graph, bowtie_path()));
}

TEST_CASE("amalgam invariants: edge count, loss range, edge-disjointness") {
  std::vector<std::pair<Graph, Graph>> cases = {
      {Graph::complete(3), Graph::complete(3)},
      {Graph::path(2), Graph::cycle(4)},
      {Graph::cycle(4), Graph::complete(3)},
      {Graph::matching(2), Graph::complete(3)},
  };
  for (const auto& [g, h] : cases) {
    auto types = enumerate_amalgams(g, h);
    CHECK(!types.empty());
    for (const Amalgam& am : types) {
      CHECK(am.graph.edge_count() == g.edge_count() * h.edge_count());
      CHECK(am.graph.vertex_count() ==
            g.vertex_count() + g.edge_count() * (h.vertex_count() - 2) -
                am.loss);
      CHECK(am.loss >= 0);
      CHECK(am.loss <= g.edge_count() * (h.vertex_count() - 2));
      // pairwise edge-disjoint, and the i-th central edge lies in copy i
      std::set<Edge> all;
      for (const EdgeSet& copy : am.copy_edges) {
        CHECK(copy.size() == static_cast<size_t>(h.edge_count()));
        for (const Edge& e : copy) CHECK(all.insert(e).second);
      }
      auto g_edges = g.edges();
      for (size_t i = 0; i < g_edges.size(); ++i) {
        Edge host_edge(am.central.map[g_edges[i].u],
                       am.central.map[g_edges[i].v]);
        CHECK(std::binary_search(am.copy_edges[i].begin(),
                                 am.copy_edges[i].end(), host_edge));
      }
    }
  }
}

TEST_CASE("is_h_covered examples") {
  Graph g = Graph::path(2);
  Graph h = Graph::complete(3);

  // u-v-w path in the bowtie: covered by the two triangles
  Embedding path_copy{{0, 1, 2}};
  auto cert = is_h_covered(bowtie_path(), path_copy, g, h);
  CHECK(cert.covered);
  REQUIRE(cert.family.size() == 2);
  std::set<Edge> seen;
  for (const EdgeSet& copy : cert.family)
    for (const Edge& e : copy) CHECK(seen.insert(e).second);

  // in K4 every pair of distinct triangles shares an edge, so a path cannot
  // be covered there; K5 has room for two edge-disjoint triangles
  auto k4cert = is_h_covered(Graph::complete(4), Embedding{{0, 1, 2}}, g, h);
  CHECK_FALSE(k4cert.covered);
  auto k5cert = is_h_covered(Graph::complete(5), Embedding{{0, 1, 2}}, g, h);
  CHECK(k5cert.covered);

  // inside a single triangle there is only one triangle to use for 2 edges
  auto bad = is_h_covered(Graph::complete(3), Embedding{{0, 1, 2}}, g, h);
  CHECK_FALSE(bad.covered);
}

TEST_CASE("completing pairs") {
  // K3 minus one edge: the removed pair is the unique completion
  Graph k3 = Graph::complete(3);
  Graph p2 = k3;
  p2.remove_edge(0, 2);
  auto pairs = completing_pairs(k3, p2);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == Edge(0, 2));

  // C4 minus one edge: only the missing chord restores a 4-cycle
  Graph c4 = Graph::cycle(4);
  Graph p3 = c4;
  p3.remove_edge(3, 0);
  auto c4pairs = completing_pairs(c4, p3);
  REQUIRE(c4pairs.size() == 1);
  CHECK(c4pairs[0] == Edge(0, 3));

  CHECK_THROWS_AS(completing_pairs(k3, Graph(3)), std::invalid_argument);
}

TEST_CASE("base graph on the bowtie, all red") {
  Graph k = bowtie_path();
  Graph g = Graph::complete(3);
  Graph g_minus = g;
  g_minus.remove_edge(0, 2);
  Graph h = Graph::complete(3);

  EdgeSet domain = h_edges(k, h);
  REQUIRE(domain.size() == 6);  // both triangles; path edges are in triangles

  Coloring all_red;
  all_red.n = 5;
  all_red.domain = domain;
  all_red.colors.assign(domain.size(), 0);

  auto result = base_graph(k, all_red, g, g_minus, h, 1);
  // the u-v-w path (red, H-covered) is completed by the pair {u,w} = {0,2}
  CHECK(std::find(result.gamma.begin(), result.gamma.end(), Edge(0, 2)) !=
        result.gamma.end());

  // all blue: no red copies at all
  Coloring all_blue = all_red;
  std::fill(all_blue.colors.begin(), all_blue.colors.end(), 1);
  auto blue_result = base_graph(k, all_blue, g, g_minus, h, 1);
  CHECK(blue_result.gamma.empty());
  CHECK(blue_result.red_h_covered_copies == 0);

  // z beyond the total count empties gamma
  auto huge_z = base_graph(k, all_red, g, g_minus, h, 1000000);
  CHECK(huge_z.gamma.empty());

  // coloring domain must match E_H exactly
  Coloring truncated = all_red;
  truncated.domain.pop_back();
  truncated.colors.pop_back();
  CHECK_THROWS_AS(base_graph(k, truncated, g, g_minus, h, 1),
                  std::invalid_argument);
}

TEST_CASE("base graph on an all-red complete host") {
  // in K6, every pair completes red H-covered paths, so gamma is everything
  Graph k6 = Graph::complete(6);
  Graph g = Graph::complete(3);
  Graph g_minus = g;
  g_minus.remove_edge(0, 1);
  EdgeSet domain = h_edges(k6, g);
  REQUIRE(domain.size() == 15);
  Coloring all_red;
  all_red.n = 6;
  all_red.domain = domain;
  all_red.colors.assign(domain.size(), 0);
  auto result = base_graph(k6, all_red, g, g_minus, g, 1);
  CHECK(result.gamma.size() == 15);
  // each pair completes one path per middle vertex
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      CHECK(result.pair_counts[pair_index(u, v)] == 4);
}

TEST_CASE("lemma goalJ on small amalgams") {
  // every subgraph J of an amalgam of (G_minus, H) containing both endpoints
  // of a completing pair satisfies v(J) - e(J)/m2(G,H) >= 2 - L
  std::vector<std::pair<Graph, Graph>> cases = {
      {Graph::complete(3), Graph::complete(3)},
      {Graph::cycle(4), Graph::complete(3)},
  };
  for (const auto& [g, h] : cases) {
    Rational m2gh = m2_asym(g, h).value;
    for (const Edge& removed : g.edges()) {
      Graph g_minus = g;
      g_minus.remove_edge(removed.u, removed.v);
      for (const Amalgam& am : enumerate_amalgams(g_minus, h)) {
        for (const Edge& comp : completing_pairs(g, g_minus)) {
          Edge target(am.central.map[comp.u], am.central.map[comp.v]);
          uint64_t both = (1ULL << target.u) | (1ULL << target.v);
          uint64_t top = 1ULL << am.graph.vertex_count();
          for (uint64_t mask = 0; mask < top; ++mask) {
            if ((mask & both) != both) continue;
            int v = __builtin_popcountll(mask);
            int e = am.graph.induced_edge_count(mask);
            Rational lhs = Rational(v) - Rational(e) / m2gh;
            CHECK(lhs >= Rational(2 - am.loss));
          }
        }
      }
    }
  }
}
