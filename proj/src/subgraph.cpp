#include "ramsey/subgraph.hpp"

#include <unordered_set>

namespace ramsey {

EdgeSet Embedding::image_edges(const Graph& pattern) const {
  EdgeSet out;
  for (const Edge& e : pattern.edges()) out.push_back(Edge(map[e.u], map[e.v]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct EmbedState {
  const Graph& host;
  const Graph& pattern;
  const std::function<bool(const Embedding&)>& fn;
  std::vector<std::vector<int>> prev_nbrs;  // pattern neighbors with lower id
  std::vector<int> pattern_degree;
  Embedding current;
  uint64_t used = 0;
  bool stopped = false;

  bool recurse(int depth) {
    int k = pattern.vertex_count();
    if (depth == k) return fn(current);
    uint64_t candidates = host.full_mask() & ~used;
    for (int w : prev_nbrs[depth]) candidates &= host.neighbors(current.map[w]);
    while (candidates) {
      int v = __builtin_ctzll(candidates);
      candidates &= candidates - 1;
      if (host.degree(v) < pattern_degree[depth]) continue;
      current.map[depth] = v;
      used |= 1ULL << v;
      bool keep_going = recurse(depth + 1);
      used &= ~(1ULL << v);
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(const Embedding&)>& fn) {
  int k = pattern.vertex_count();
  if (k > host.vertex_count()) return;
  EmbedState st{host, pattern, fn, {}, {}, {}, 0, false};
  st.prev_nbrs.resize(k);
  st.pattern_degree.resize(k);
  for (int u = 0; u < k; ++u) {
    st.pattern_degree[u] = pattern.degree(u);
    for (int w = 0; w < u; ++w)
      if (pattern.has_edge(u, w)) st.prev_nbrs[u].push_back(w);
  }
  st.current.map.assign(k, -1);
  st.recurse(0);
}

EmbeddingList enumerate_embeddings(const Graph& host, const Graph& pattern,
                                   uint64_t cap) {
  EmbeddingList out;
  for_each_embedding(host, pattern, [&](const Embedding& e) {
    if (out.embeddings.size() == cap) {
      out.truncated = true;
      return false;
    }
    out.embeddings.push_back(e);
    return true;
  });
  return out;
}

uint64_t count_embeddings(const Graph& host, const Graph& pattern) {
  uint64_t count = 0;
  for_each_embedding(host, pattern, [&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

uint64_t automorphism_count(const Graph& g) { return count_embeddings(g, g); }

uint64_t count_copies(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return 0;
  uint64_t embeddings = count_embeddings(host, pattern);
  return embeddings / automorphism_count(pattern);
}

namespace {

// Enumerates cliques v1 < v2 < ... < vr; each copy of K_r appears once.
void for_each_clique(const Graph& host, int r,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> stack;
  std::function<void(uint64_t, int)> rec = [&](uint64_t common, int remaining) {
    if (remaining == 0) {
      fn(stack);
      return;
    }
    uint64_t bits = common;
    while (bits) {
      int v = __builtin_ctzll(bits);
      bits &= bits - 1;
      stack.push_back(v);
      // only candidates above v keep the ordering canonical
      uint64_t next = common & host.neighbors(v);
      next &= ~((v == 63) ? ~0ULL : ((1ULL << (v + 1)) - 1));
      rec(next, remaining - 1);
      stack.pop_back();
    }
  };
  rec(host.full_mask(), r);
}

struct EdgeSetHash {
  size_t operator()(const EdgeSet& es) const {
    size_t h = es.size();
    for (const Edge& e : es) {
      size_t x = static_cast<size_t>(e.u) << 8 | static_cast<size_t>(e.v);
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::vector<EdgeSet> enumerate_copy_edge_sets(const Graph& host,
                                              const Graph& pattern, size_t cap,
                                              bool* truncated) {
  int k = pattern.vertex_count();
  if (!pattern.isolated_vertices().empty())
    throw std::invalid_argument(
        "enumerate_copy_edge_sets expects a pattern without isolated "
        "vertices");
  std::vector<EdgeSet> out;
  if (truncated) *truncated = false;
  if (k > host.vertex_count()) return out;

  bool complete = pattern.edge_count() == k * (k - 1) / 2;
  if (complete) {
    for_each_clique(host, k, [&](const std::vector<int>& verts) {
      if (out.size() >= cap) {
        if (truncated) *truncated = true;
        return;
      }
      EdgeSet es;
      for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
          es.push_back(Edge(verts[i], verts[j]));
      std::sort(es.begin(), es.end());
      out.push_back(std::move(es));
    });
    return out;
  }

  std::unordered_set<EdgeSet, EdgeSetHash> seen;
  for_each_embedding(host, pattern, [&](const Embedding& e) {
    EdgeSet es = e.image_edges(pattern);
    if (seen.count(es)) return true;
    if (out.size() >= cap) {
      if (truncated) *truncated = true;
      return false;
    }
    seen.insert(es);
    out.push_back(std::move(es));
    return true;
  });
  return out;
}

void for_each_subgraph(
    const Graph& g, SubgraphMode mode, int min_vertices,
    const std::function<bool(uint64_t, const EdgeSet&)>& fn) {
  int n = g.vertex_count();
  int cap = mode == SubgraphMode::kAll ? 16 : 24;
  if (n > cap)
    throw std::invalid_argument(
        "subgraph enumeration capped at " + std::to_string(cap) +
        " vertices for this mode");
  uint64_t top = 1ULL << n;
  for (uint64_t mask = 0; mask < top; ++mask) {
    if (__builtin_popcountll(mask) < min_vertices) continue;
    EdgeSet induced;
    uint64_t bits = mask;
    while (bits) {
      int u = __builtin_ctzll(bits);
      bits &= bits - 1;
      uint64_t rest = bits & g.neighbors(u);
      while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        induced.push_back(Edge(u, v));
      }
    }
    std::sort(induced.begin(), induced.end());
    if (mode == SubgraphMode::kInduced) {
      if (!fn(mask, induced)) return;
      continue;
    }
    if (induced.size() > 62)
      throw std::invalid_argument("edge-subset enumeration too large");
    uint64_t etop = 1ULL << induced.size();
    EdgeSet subset;
    for (uint64_t emask = 0; emask < etop; ++emask) {
      subset.clear();
      uint64_t eb = emask;
      while (eb) {
        int idx = __builtin_ctzll(eb);
        eb &= eb - 1;
        subset.push_back(induced[idx]);
      }
      if (!fn(mask, subset)) return;
    }
  }
}

}  // namespace ramsey
