#include "ramsey/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramsey {

Graph Graph::induced(uint64_t mask) const {
  mask &= full_mask();
  int k = __builtin_popcountll(mask);
  Graph out(k);
  std::vector<int> verts;
  verts.reserve(k);
  uint64_t bits = mask;
  while (bits) {
    verts.push_back(__builtin_ctzll(bits));
    bits &= bits - 1;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(verts[i], verts[j])) out.add_edge(i, j);
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    uint64_t bits = frontier;
    while (bits) {
      int v = __builtin_ctzll(bits);
      bits &= bits - 1;
      next |= adj_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_mask();
}

std::vector<int> Graph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] == 0) out.push_back(v);
  return out;
}

Graph Graph::core() const {
  uint64_t mask = 0;
  for (int v = 0; v < n_; ++v)
    if (adj_[v]) mask |= 1ULL << v;
  return induced(mask);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int len) {
  if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
  Graph g(len);
  for (int v = 0; v < len; ++v) g.add_edge(v, (v + 1) % len);
  return g;
}

Graph Graph::path(int num_edges) {
  if (num_edges < 1) throw std::invalid_argument("path needs >= 1 edge");
  Graph g(num_edges + 1);
  for (int v = 0; v < num_edges; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph Graph::matching(int num_edges) {
  if (num_edges < 1) throw std::invalid_argument("matching needs >= 1 edge");
  Graph g(2 * num_edges);
  for (int i = 0; i < num_edges; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& es) {
  Graph g(n);
  for (const Edge& e : es) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  int off = a.vertex_count();
  for (const Edge& e : b.edges()) g.add_edge(e.u + off, e.v + off);
  return g;
}

Graph make_named(const std::string& spec) {
  if (spec.size() < 2) throw std::invalid_argument("unknown graph spec: " + spec);
  char kind = spec[0];
  std::string rest = spec.substr(1);
  auto parse_int = [&](const std::string& s) {
    if (s.empty() ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
      throw std::invalid_argument("unknown graph spec: " + spec);
    return std::stoi(s);
  };
  switch (kind) {
    case 'K': {
      auto comma = rest.find(',');
      if (comma != std::string::npos)
        return Graph::complete_bipartite(parse_int(rest.substr(0, comma)),
                                         parse_int(rest.substr(comma + 1)));
      int n = parse_int(rest);
      if (n < 1 || n > Graph::kMaxVertices)
        throw std::invalid_argument("K<n> out of range: " + spec);
      return Graph::complete(n);
    }
    case 'C':
      return Graph::cycle(parse_int(rest));
    case 'P':
      return Graph::path(parse_int(rest));
    case 'M':
      return Graph::matching(parse_int(rest));
    default:
      throw std::invalid_argument("unknown graph spec: " + spec);
  }
}

// --- graph6 ---------------------------------------------------------------

Graph parse_graph6(const std::string& text) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > text.size())
      throw GraphParseError("graph6 input truncated", text.size());
  };
  auto val = [&](size_t at) {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
      throw GraphParseError("invalid graph6 byte", at);
    return static_cast<int>(c) - 63;
  };

  need(1);
  long long n;
  if (text[pos] == '~') {
    ++pos;
    need(1);
    if (text[pos] == '~') {
      throw GraphParseError("graph6 8-byte order not supported", pos);
    }
    need(3);
    n = (static_cast<long long>(val(pos)) << 12) | (val(pos + 1) << 6) |
        val(pos + 2);
    pos += 3;
  } else {
    n = val(pos);
    ++pos;
  }
  if (n > Graph::kMaxVertices)
    throw GraphParseError("graph order exceeds 64", 0);

  Graph g(static_cast<int>(n));
  long long bits_needed = n * (n - 1) / 2;
  long long bytes_needed = (bits_needed + 5) / 6;
  need(static_cast<size_t>(bytes_needed));

  // bit order: (0,1),(0,2),(1,2),(0,3),... column v, rows u < v
  long long bit = 0;
  int cu = 0, cv = 1;
  for (long long b = 0; b < bytes_needed; ++b) {
    int x = val(pos + b);
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (x >> k) & 1;
      if (bit >= bits_needed) {
        if (set) throw GraphParseError("nonzero graph6 padding", pos + b);
        continue;
      }
      if (set) g.add_edge(cu, cv);
      if (++cu == cv) {
        cu = 0;
        ++cv;
      }
    }
  }
  pos += static_cast<size_t>(bytes_needed);
  if (pos != text.size())
    throw GraphParseError("trailing bytes after graph6 payload", pos);
  return g;
}

std::string serialize_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (bits_needed % 6 != 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// --- edge list --------------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m))
    throw std::invalid_argument("edge list must start with \"n m\"");
  if (n < 0 || n > Graph::kMaxVertices)
    throw std::invalid_argument("edge list vertex count out of range");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list truncated at edge " +
                                  std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("edge list has invalid edge " +
                                  std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  if (spec.rfind("el:", 0) == 0) return parse_edge_list(spec.substr(3));
  if (!spec.empty() &&
      (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P' || spec[0] == 'M')) {
    try {
      return make_named(spec);
    } catch (const std::invalid_argument&) {
      // fall through to graph6
    }
  }
  return parse_graph6(spec);
}

}  // namespace ramsey
