#include "ramsey/canon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ramsey {

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  int n = g.vertex_count();
  if (colors.empty()) colors.assign(n, 0);
  if (n == 0) return colors;
  int num_colors = 1 + *std::max_element(colors.begin(), colors.end());
  for (;;) {
    // signature: old color followed by neighbor counts per color
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].assign(num_colors + 1, 0);
      sig[v][0] = colors[v];
      uint64_t bits = g.neighbors(v);
      while (bits) {
        int w = __builtin_ctzll(bits);
        bits &= bits - 1;
        ++sig[v][1 + colors[w]];
      }
    }
    std::map<std::vector<int>, int> order;
    for (int v = 0; v < n; ++v) order.emplace(sig[v], 0);
    int next = 0;
    for (auto& kv : order) kv.second = next++;
    for (int v = 0; v < n; ++v) colors[v] = order[sig[v]];
    if (next == num_colors) return colors;
    num_colors = next;
  }
}

std::string invariant_key(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> colors = refine_colors(g);
  int num_colors = n == 0 ? 0 : 1 + *std::max_element(colors.begin(), colors.end());
  std::vector<int> sizes(num_colors, 0);
  for (int v = 0; v < n; ++v) ++sizes[colors[v]];
  std::vector<int> quotient(num_colors * num_colors, 0);
  for (const Edge& e : g.edges()) {
    ++quotient[colors[e.u] * num_colors + colors[e.v]];
    if (colors[e.u] != colors[e.v])
      ++quotient[colors[e.v] * num_colors + colors[e.u]];
  }
  std::ostringstream key;
  key << n << ':' << g.edge_count() << ':';
  for (int s : sizes) key << s << ',';
  key << ':';
  for (int q : quotient) key << q << ',';
  return key.str();
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& order;   // a's vertices, grouped by color
  const std::vector<uint64_t>& candidates;  // per a-vertex: same-color b mask
  std::vector<int> map;
  uint64_t used = 0;

  bool recurse(size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    uint64_t cand = candidates[u] & ~used;
    while (cand) {
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      bool ok = true;
      for (size_t i = 0; i < depth && ok; ++i) {
        int w = order[i];
        if (a.has_edge(u, w) != b.has_edge(v, map[w])) ok = false;
      }
      if (!ok) continue;
      map[u] = v;
      used |= 1ULL << v;
      if (recurse(depth + 1)) return true;
      used &= ~(1ULL << v);
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n == 0) return true;
  std::vector<int> ca = refine_colors(a);
  std::vector<int> cb = refine_colors(b);
  int num_colors = 1 + *std::max_element(ca.begin(), ca.end());
  if (num_colors != 1 + *std::max_element(cb.begin(), cb.end())) return false;
  std::vector<int> sa(num_colors, 0), sb(num_colors, 0);
  std::vector<uint64_t> color_mask_b(num_colors, 0);
  for (int v = 0; v < n; ++v) ++sa[ca[v]];
  for (int v = 0; v < n; ++v) {
    ++sb[cb[v]];
    color_mask_b[cb[v]] |= 1ULL << v;
  }
  if (sa != sb) return false;

  // search smallest cells first
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (sa[ca[x]] != sa[ca[y]]) return sa[ca[x]] < sa[ca[y]];
    if (ca[x] != ca[y]) return ca[x] < ca[y];
    return x < y;
  });
  std::vector<uint64_t> candidates(n);
  for (int v = 0; v < n; ++v) candidates[v] = color_mask_b[ca[v]];

  IsoSearch search{a, b, order, candidates, std::vector<int>(n, -1), 0};
  return search.recurse(0);
}

size_t IsoClassSet::find_or_insert(const Graph& g) {
  std::string key = invariant_key(g);
  auto& bucket = buckets_[key];
  for (size_t idx : bucket)
    if (isomorphic(reps_[idx], g)) return idx;
  reps_.push_back(g);
  bucket.push_back(reps_.size() - 1);
  return reps_.size() - 1;
}

size_t IsoClassSet::find(const Graph& g) const {
  auto it = buckets_.find(invariant_key(g));
  if (it == buckets_.end()) return npos;
  for (size_t idx : it->second)
    if (isomorphic(reps_[idx], g)) return idx;
  return npos;
}

std::vector<Graph> enumerate_universe(int max_vertices, bool connected_only) {
  if (max_vertices < 0 || max_vertices > 8)
    throw std::invalid_argument("universe enumeration capped at 8 vertices");
  std::vector<Graph> out;
  std::vector<Graph> level;
  level.push_back(Graph(0));
  out.push_back(Graph(0));
  for (int n = 1; n <= max_vertices; ++n) {
    IsoClassSet classes;
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      uint64_t top = 1ULL << (n - 1);
      for (uint64_t mask = 0; mask < top; ++mask) {
        Graph g(n);
        for (const Edge& e : parent.edges()) g.add_edge(e.u, e.v);
        uint64_t bits = mask;
        while (bits) {
          int v = __builtin_ctzll(bits);
          bits &= bits - 1;
          g.add_edge(v, n - 1);
        }
        size_t before = classes.size();
        if (classes.find_or_insert(g) == before) next.push_back(g);
      }
    }
    for (const Graph& g : next) out.push_back(g);
    level = std::move(next);
  }
  if (connected_only) {
    std::vector<Graph> filtered;
    for (const Graph& g : out)
      if (g.vertex_count() >= 1 && g.is_connected()) filtered.push_back(g);
    return filtered;
  }
  return out;
}

}  // namespace ramsey
