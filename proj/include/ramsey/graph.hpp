#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

struct Edge {
  int u = 0;  // u < v always
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

using EdgeSet = std::vector<Edge>;  // kept sorted and unique

// colex index of an unordered pair; matches the sampling streams
inline uint64_t pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<uint64_t>(v) * (v - 1) / 2 + u;
}

// Simple undirected graph on vertices 0..n-1, one adjacency bitset per
// vertex. Immutable in spirit: build once, then share freely across threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be in [0, 64]");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool empty() const { return m_ == 0; }  // "empty" = no edges

  bool has_edge(int u, int v) const {
    return u != v && (adj_[u] >> v) & 1ULL;
  }
  void add_edge(int u, int v) {
    check_pair(u, v);
    if (has_edge(u, v)) return;
    adj_[u] |= 1ULL << v;
    adj_[v] |= 1ULL << u;
    ++m_;
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    if (!has_edge(u, v)) return;
    adj_[u] &= ~(1ULL << v);
    adj_[v] &= ~(1ULL << u);
    --m_;
  }

  uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u + 1 < n_; ++u) {
      // neighbors above u only
      uint64_t bits = adj_[u] & ~((2ULL << u) - 1);
      while (bits) {
        int v = __builtin_ctzll(bits);
        bits &= bits - 1;
        out.push_back(Edge(u, v));
      }
    }
    return out;
  }

  // Subgraph induced on the set bits of mask, vertices relabelled in
  // ascending order.
  Graph induced(uint64_t mask) const;
  int induced_edge_count(uint64_t mask) const {
    int e = 0;
    uint64_t bits = mask;
    while (bits) {
      int v = __builtin_ctzll(bits);
      bits &= bits - 1;
      e += __builtin_popcountll(adj_[v] & bits);
    }
    return e;
  }

  uint64_t full_mask() const {
    return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
  }

  bool is_connected() const;
  std::vector<int> isolated_vertices() const;
  // Graph minus isolated vertices (relabelled); used where only the edge
  // structure matters.
  Graph core() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  static Graph complete(int n);
  static Graph cycle(int len);
  static Graph path(int num_edges);
  static Graph complete_bipartite(int a, int b);
  static Graph matching(int num_edges);
  static Graph from_edges(int n, const std::vector<Edge>& es);
  static Graph disjoint_union(const Graph& a, const Graph& b);

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw std::invalid_argument("bad vertex pair");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<uint64_t> adj_;
};

// --- construction and I/O ----------------------------------------------

// K<n>, C<l> (l>=3), P<k> (path with k edges), K<a>,<b>, M<k> (matching)
Graph make_named(const std::string& spec);

struct GraphParseError : std::runtime_error {
  size_t byte_offset;
  GraphParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
};

Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// "n m\nu v\n..." fallback format
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Accepts a named spec, graph6 ("g6:" prefix forces it), or "el:<text>".
Graph parse_graph_spec(const std::string& spec);

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_HPP
