#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <functional>

#include "ramsey/canon.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/subgraph.hpp"

using namespace ramsey;

namespace {

// Naive oracle: count injective vertex maps that send pattern edges to host
// edges, by trying every map directly.
uint64_t oracle_count_embeddings(const Graph& host, const Graph& pattern) {
  int k = pattern.vertex_count();
  int n = host.vertex_count();
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  uint64_t count = 0;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int w = 0; w < depth && ok; ++w)
        if (pattern.has_edge(depth, w) && !host.has_edge(v, map[w])) ok = false;
      if (!ok) continue;
      map[depth] = v;
      used[v] = true;
      rec(depth + 1);
      used[v] = false;
    }
  };
  rec(0);
  return count;
}

Graph random_graph(int n, double p, uint64_t seed) {
  CounterRng rng(RngSpec{seed, 999, 0});
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("named graph constructors") {
  Graph k3 = make_named("K3");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);

  Graph c5 = make_named("C5");
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  Graph m2 = make_named("M2");
  CHECK(m2.vertex_count() == 4);
  CHECK(m2.edge_count() == 2);
  CHECK(m2.has_edge(0, 1));
  CHECK(m2.has_edge(2, 3));

  Graph p2 = make_named("P2");
  CHECK(p2.vertex_count() == 3);
  CHECK(p2.edge_count() == 2);

  Graph k23 = make_named("K2,3");
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);

  CHECK_THROWS_AS(make_named("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(make_named("C2"), std::invalid_argument);
  CHECK_THROWS_AS(make_named("K"), std::invalid_argument);
}

TEST_CASE("graph6 parsing matches external references") {
  // reference strings produced by networkx
  CHECK(serialize_graph6(Graph::complete(4)) == "C~");
  CHECK(serialize_graph6(Graph::cycle(5)) == "Dhc");
  CHECK(serialize_graph6(Graph::complete_bipartite(2, 3)) == "D]o");
  CHECK(serialize_graph6(Graph::path(3)) == "Ch");

  Graph k24 = parse_graph6("E?~o");
  CHECK(k24.vertex_count() == 6);
  CHECK(k24.edge_count() == 8);
  CHECK(isomorphic(k24, Graph::complete_bipartite(2, 4)));
  CHECK(serialize_graph6(k24) == "E?~o");

  Graph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6("B"), GraphParseError);    // truncated
  CHECK_THROWS_AS(parse_graph6("C~~"), GraphParseError);  // trailing bytes
  CHECK_THROWS_AS(parse_graph6("C "), GraphParseError);   // invalid byte
  // nonzero padding: 2 vertices need 1 bit; 'o' = 110000 has trailing ones
  CHECK_THROWS_AS(parse_graph6("Ao"), GraphParseError);
  try {
    parse_graph6("B");
  } catch (const GraphParseError& err) {
    CHECK(err.byte_offset == 1);
  }
}

TEST_CASE("graph6 round trip: exhaustive to 7, random above") {
  for (const Graph& g : enumerate_universe(7, false)) {
    Graph back = parse_graph6(serialize_graph6(g));
    CHECK(back == g);
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(8 + static_cast<int>(seed % 3), 0.4, seed);
    CHECK(parse_graph6(serialize_graph6(g)) == g);
  }
}

TEST_CASE("edge list round trip") {
  Graph g = random_graph(9, 0.5, 7);
  CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3"), std::invalid_argument);
}

TEST_CASE("copy counting small cases") {
  CHECK(count_copies(Graph::complete(4), Graph::complete(3)) == 4);
  CHECK(count_copies(Graph::complete(4), Graph::complete(2)) == 6);
  CHECK(count_copies(Graph::cycle(5), Graph::complete(3)) == 0);
}

TEST_CASE("copy counting invariants") {
  auto universe = enumerate_universe(5, false);
  for (const Graph& g : universe) {
    if (g.vertex_count() == 0) continue;
    CHECK(count_copies(g, g) == 1);
    if (g.vertex_count() >= 2)
      CHECK(count_copies(g, Graph::complete(2)) ==
            static_cast<uint64_t>(g.edge_count()));
  }
}

TEST_CASE("embeddings agree with the permutation oracle") {
  auto universe = enumerate_universe(4, false);
  std::vector<Graph> hosts = {Graph::complete(5), Graph::cycle(6),
                              random_graph(6, 0.5, 3), random_graph(7, 0.3, 4)};
  for (const Graph& pattern : universe) {
    if (pattern.vertex_count() == 0) continue;
    for (const Graph& host : hosts) {
      CHECK(count_embeddings(host, pattern) ==
            oracle_count_embeddings(host, pattern));
    }
  }
}

TEST_CASE("complete-host copy counts via falling factorial") {
  // count_copies(K_n, G) * |Aut(G)| = n (n-1) ... (n - v_G + 1)
  for (int n : {5, 6, 7}) {
    Graph host = Graph::complete(n);
    for (const Graph& g : enumerate_universe(5, false)) {
      if (g.vertex_count() == 0 || !g.isolated_vertices().empty()) continue;
      uint64_t falling = 1;
      for (int i = 0; i < g.vertex_count(); ++i) falling *= n - i;
      CHECK(count_copies(host, g) * automorphism_count(g) == falling);
    }
  }
}

TEST_CASE("embedding enumeration order and truncation") {
  auto list = enumerate_embeddings(Graph::complete(3), Graph::complete(2), 100);
  CHECK(list.embeddings.size() == 6);
  CHECK_FALSE(list.truncated);
  // lexicographic on the vertex map
  for (size_t i = 1; i < list.embeddings.size(); ++i)
    CHECK(list.embeddings[i - 1] < list.embeddings[i]);

  auto empty = enumerate_embeddings(Graph::path(2), Graph::complete(3), 100);
  CHECK(empty.embeddings.empty());

  auto capped = enumerate_embeddings(Graph::complete(4), Graph::complete(3), 10);
  CHECK(capped.embeddings.size() == 10);
  CHECK(capped.truncated);
}

TEST_CASE("subgraph stream") {
  int count = 0;
  for_each_subgraph(Graph::complete(3), SubgraphMode::kInduced, 2,
                    [&](uint64_t, const EdgeSet&) {
                      ++count;
                      return true;
                    });
  CHECK(count == 4);  // 3 pairs + the triangle

  count = 0;
  for_each_subgraph(Graph(3), SubgraphMode::kInduced, 2,
                    [&](uint64_t, const EdgeSet& es) {
                      CHECK(es.empty());
                      ++count;
                      return true;
                    });
  CHECK(count == 4);

  count = 0;
  for_each_subgraph(Graph::complete(3), SubgraphMode::kInduced, 4,
                    [&](uint64_t, const EdgeSet&) {
                      ++count;
                      return true;
                    });
  CHECK(count == 0);

  // "all" mode over K3: vertex subsets with every edge subset
  count = 0;
  for_each_subgraph(Graph::complete(3), SubgraphMode::kAll, 0,
                    [&](uint64_t, const EdgeSet&) {
                      ++count;
                      return true;
                    });
  // 1 empty + 3 singletons + 3 pairs * 2 + 1 triple * 8
  CHECK(count == 18);
}

TEST_CASE("universe counts match the standard catalog") {
  // A000088: 1, 1, 2, 4, 11, 34, 156, 1044
  std::vector<size_t> cumulative = {1, 2, 4, 8, 19, 53, 209, 1253};
  for (int cap = 0; cap <= 7; ++cap) {
    auto u = enumerate_universe(cap, false);
    CHECK(u.size() == cumulative[static_cast<size_t>(cap)]);
    // pairwise non-isomorphic by construction; spot check determinism
    auto again = enumerate_universe(cap, false);
    REQUIRE(again.size() == u.size());
    for (size_t i = 0; i < u.size(); ++i) CHECK(again[i] == u[i]);
  }

  auto connected = enumerate_universe(3, true);
  REQUIRE(connected.size() == 4);  // K1, K2, P2, K3
  CHECK(connected[0].vertex_count() == 1);
  CHECK(isomorphic(connected[3], Graph::complete(3)));
}

TEST_CASE("universe matches the external atlas fixtures") {
  for (int n : {5, 6}) {
    std::ifstream in(std::string(RAMSEY_FIXTURE_DIR) + "/graphs" +
                     std::to_string(n) + ".g6");
    REQUIRE(in.good());
    IsoClassSet reference;
    std::string line;
    size_t rows = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Graph g = parse_graph6(line);
      REQUIRE(g.vertex_count() == n);
      CHECK(reference.find_or_insert(g) == rows);
      ++rows;
    }
    size_t ours = 0;
    for (const Graph& g : enumerate_universe(n, false)) {
      if (g.vertex_count() != n) continue;
      ++ours;
      CHECK(reference.find(g) != IsoClassSet::npos);
    }
    CHECK(ours == rows);
  }
}

TEST_CASE("isomorphism distinguishes same-degree-sequence pairs") {
  Graph two_triangles =
      Graph::disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK_FALSE(isomorphic(Graph::cycle(6), two_triangles));
  CHECK(isomorphic(Graph::cycle(6), parse_graph6(serialize_graph6(Graph::cycle(6)))));
  CHECK_FALSE(isomorphic(Graph::path(3), Graph::disjoint_union(
                                              Graph::complete(2),
                                              Graph::complete(2))));
}
