#include "ramsey/amalgam.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ramsey/arrow.hpp"
#include "ramsey/canon.hpp"

namespace ramsey {

namespace {

struct AmalgamBuilder {
  const Graph& g;
  const Graph& h;
  const AmalgamCaps& caps;
  std::vector<Edge> g_edges;
  std::vector<Edge> h_edges_list;
  int vg, vh;

  AmalgamBuilder(const Graph& g_in, const Graph& h_in,
                 const AmalgamCaps& caps_in)
      : g(g_in),
        h(h_in),
        caps(caps_in),
        g_edges(g_in.edges()),
        h_edges_list(h_in.edges()),
        vg(g_in.vertex_count()),
        vh(h_in.vertex_count()) {}

  int vertex_count = 0;                   // vertices allocated so far
  std::set<Edge> used;                    // union of copy edge sets
  std::vector<Embedding> copy_embeddings;
  std::vector<EdgeSet> copy_edge_sets;
  std::vector<std::vector<int>> h_auts;   // automorphisms of H

  IsoClassSet seen;
  std::vector<Amalgam> results;

  void run() {
    vertex_count = vg;
    for_each_embedding(h, h, [&](const Embedding& aut) {
      h_auts.push_back(aut.map);
      return true;
    });
    glue(0);
  }

  void glue(size_t edge_idx) {
    if (results.size() >= caps.max_results) return;
    if (edge_idx == g_edges.size()) {
      record();
      return;
    }
    const Edge& ge = g_edges[edge_idx];
    int base = vertex_count;
    for (const Edge& he : h_edges_list) {
      for (int flip = 0; flip < 2; ++flip) {
        Embedding emb;
        emb.map.assign(vh, -1);
        emb.map[flip ? he.v : he.u] = ge.u;
        emb.map[flip ? he.u : he.v] = ge.v;
        assign_rest(edge_idx, base, emb, 0);
      }
    }
  }

  // Maps the remaining H-vertices (ascending), each to an existing vertex or
  // to the next fresh one.
  void assign_rest(size_t edge_idx, int base, Embedding& emb, int hv) {
    while (hv < vh && emb.map[hv] >= 0) ++hv;
    if (hv == vh) {
      if (aut_canonical(emb, base)) finish_copy(edge_idx, emb);
      return;
    }
    for (int target = 0; target <= vertex_count; ++target) {
      if (target == vertex_count) {
        if (vertex_count >= caps.max_vertices) break;
      } else if (std::find(emb.map.begin(), emb.map.end(), target) !=
                 emb.map.end()) {
        continue;
      }
      emb.map[hv] = target;
      int saved = vertex_count;
      if (target == vertex_count) ++vertex_count;
      assign_rest(edge_idx, base, emb, hv + 1);
      vertex_count = saved;
      emb.map[hv] = -1;
    }
  }

  // Keep one embedding per copy image: the lexicographic minimum over
  // Aut(H)-variants, with each variant's fresh vertices renumbered to
  // first-use order so it compares against genuinely enumerable states.
  bool aut_canonical(const Embedding& emb, int base) const {
    std::vector<int> variant(static_cast<size_t>(vh));
    std::vector<int> relabel;
    for (const std::vector<int>& aut : h_auts) {
      for (int v = 0; v < vh; ++v)
        variant[static_cast<size_t>(v)] =
            emb.map[static_cast<size_t>(aut[static_cast<size_t>(v)])];
      relabel.assign(static_cast<size_t>(vertex_count) + vh, -1);
      int next_fresh = base;
      for (int v = 0; v < vh; ++v) {
        int& x = variant[static_cast<size_t>(v)];
        if (x >= base) {
          if (relabel[static_cast<size_t>(x)] < 0)
            relabel[static_cast<size_t>(x)] = next_fresh++;
          x = relabel[static_cast<size_t>(x)];
        }
      }
      if (variant < emb.map) return false;
    }
    return true;
  }

  void finish_copy(size_t edge_idx, const Embedding& emb) {
    EdgeSet image;
    for (const Edge& e : h.edges())
      image.push_back(Edge(emb.map[e.u], emb.map[e.v]));
    std::sort(image.begin(), image.end());
    for (const Edge& e : image)
      if (used.count(e)) return;  // edge-disjointness violated
    for (const Edge& e : image) used.insert(e);
    copy_embeddings.push_back(emb);
    copy_edge_sets.push_back(image);
    glue(edge_idx + 1);
    copy_edge_sets.pop_back();
    copy_embeddings.pop_back();
    for (const Edge& e : image) used.erase(e);
  }

  void record() {
    Graph amalgam(vertex_count);
    for (const Edge& e : used) amalgam.add_edge(e.u, e.v);
    size_t before = seen.size();
    if (seen.find_or_insert(amalgam) != before) return;  // known type
    Amalgam out;
    out.graph = amalgam;
    out.central.map.resize(vg);
    for (int v = 0; v < vg; ++v) out.central.map[v] = v;
    out.copy_embeddings = copy_embeddings;
    out.copy_edges = copy_edge_sets;
    out.loss = vg + static_cast<int>(g_edges.size()) * (vh - 2) - vertex_count;
    results.push_back(std::move(out));
  }
};

}  // namespace

std::vector<Amalgam> enumerate_amalgams(const Graph& g, const Graph& h,
                                        const AmalgamCaps& caps) {
  if (g.edge_count() == 0 || h.edge_count() == 0)
    throw std::invalid_argument("amalgams need nonempty G and H");
  if (caps.max_vertices > Graph::kMaxVertices)
    throw std::invalid_argument("amalgam vertex cap exceeds graph capacity");
  if (g.vertex_count() > caps.max_vertices)
    throw std::invalid_argument("G alone exceeds the amalgam vertex cap");
  AmalgamBuilder builder(g, h, caps);
  builder.run();
  return std::move(builder.results);
}

namespace {

// Backtracking exact cover: pick one H-copy per g-edge, pairwise
// edge-disjoint.
bool cover_search(const std::vector<std::vector<const EdgeSet*>>& candidates,
                  size_t idx, const std::vector<size_t>& order,
                  std::set<Edge>& used, std::vector<EdgeSet>& chosen) {
  if (idx == order.size()) return true;
  for (const EdgeSet* copy : candidates[order[idx]]) {
    bool clash = false;
    for (const Edge& e : *copy)
      if (used.count(e)) {
        clash = true;
        break;
      }
    if (clash) continue;
    for (const Edge& e : *copy) used.insert(e);
    chosen[order[idx]] = *copy;
    if (cover_search(candidates, idx + 1, order, used, chosen)) return true;
    for (const Edge& e : *copy) used.erase(e);
  }
  return false;
}

CoverCertificate cover_with_copies(const std::vector<Edge>& copy_edges,
                                   const std::vector<EdgeSet>& h_copies) {
  CoverCertificate cert;
  size_t k = copy_edges.size();
  std::vector<std::vector<const EdgeSet*>> candidates(k);
  for (const EdgeSet& copy : h_copies) {
    for (size_t i = 0; i < k; ++i)
      if (std::binary_search(copy.begin(), copy.end(), copy_edges[i]))
        candidates[i].push_back(&copy);
  }
  std::vector<size_t> order(k);
  for (size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return candidates[a].size() < candidates[b].size();
  });
  std::set<Edge> used;
  std::vector<EdgeSet> chosen(k);
  if (cover_search(candidates, 0, order, used, chosen)) {
    cert.covered = true;
    cert.family = std::move(chosen);
  }
  return cert;
}

}  // namespace

CoverCertificate is_h_covered(const Graph& a, const Embedding& g_copy,
                              const Graph& g, const Graph& h) {
  if (g.edge_count() == 0) return {true, {}};
  if (h.vertex_count() > a.vertex_count() || h.edge_count() == 0)
    return {};
  std::vector<Edge> copy_edges;
  for (const Edge& e : g.edges()) {
    Edge host_edge(g_copy.map[e.u], g_copy.map[e.v]);
    if (!a.has_edge(host_edge.u, host_edge.v))
      throw std::invalid_argument("g_copy is not an embedding into the host");
    copy_edges.push_back(host_edge);
  }
  std::vector<EdgeSet> h_copies = enumerate_copy_edge_sets(a, h.core());
  return cover_with_copies(copy_edges, h_copies);
}

std::vector<Edge> completing_pairs(const Graph& g, const Graph& g_minus) {
  if (g_minus.vertex_count() != g.vertex_count() ||
      g_minus.edge_count() != g.edge_count() - 1)
    throw std::invalid_argument(
        "g_minus must be g with exactly one edge removed");
  std::vector<Edge> out;
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g_minus.has_edge(x, y)) continue;
      Graph candidate = g_minus;
      candidate.add_edge(x, y);
      if (isomorphic(candidate, g)) out.push_back(Edge(x, y));
    }
  return out;
}

BaseGraphResult base_graph(const Graph& k, const Coloring& h_coloring,
                           const Graph& g, const Graph& g_minus,
                           const Graph& h, long long z) {
  if (z < 1) throw std::invalid_argument("z must be >= 1");
  EdgeSet domain = h_edges(k, h);
  if (h_coloring.domain != domain)
    throw std::invalid_argument(
        "coloring domain must equal the H-edges of the host");

  BaseGraphResult result;
  int n = k.vertex_count();
  result.pair_counts.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);

  // red edges of the domain; copies of g_minus must live entirely here
  Graph red_domain(n);
  for (size_t i = 0; i < domain.size(); ++i)
    if (h_coloring.colors[i] == 0)
      red_domain.add_edge(domain[i].u, domain[i].v);

  std::vector<Edge> completions = completing_pairs(g, g_minus);
  if (completions.empty()) return result;

  std::vector<EdgeSet> h_copies = enumerate_copy_edge_sets(k, h.core());

  // distinct red copies of g_minus: dedupe embeddings by (vertices, edges)
  std::set<std::pair<std::vector<int>, EdgeSet>> seen;
  for_each_embedding(red_domain, g_minus, [&](const Embedding& emb) {
    std::vector<int> verts = emb.map;
    std::sort(verts.begin(), verts.end());
    EdgeSet image = emb.image_edges(g_minus);
    if (!seen.emplace(std::move(verts), image).second) return true;

    std::vector<Edge> copy_edges;
    for (const Edge& e : g_minus.edges())
      copy_edges.push_back(Edge(emb.map[e.u], emb.map[e.v]));
    if (!cover_with_copies(copy_edges, h_copies).covered) return true;

    ++result.red_h_covered_copies;
    for (const Edge& c : completions) {
      Edge pair(emb.map[c.u], emb.map[c.v]);
      ++result.pair_counts[pair_index(pair.u, pair.v)];
    }
    return true;
  });

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (result.pair_counts[pair_index(u, v)] >= z)
        result.gamma.push_back(Edge(u, v));
  return result;
}

long long z_from_shape(double z_const, int n, const Graph& g, const Graph& h,
                       double p1) {
  double shape = z_const * std::pow(n, g.vertex_count() - 2) *
                 std::pow(std::pow(n, h.vertex_count() - 2) *
                              std::pow(p1, h.edge_count()),
                          g.edge_count() - 1);
  if (!(shape > 1.0)) return 1;
  return std::llround(shape);
}

}  // namespace ramsey
