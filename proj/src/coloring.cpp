#include "ramsey/coloring.hpp"

#include <json.hpp>

namespace ramsey {

Graph Coloring::color_class(const Graph& host, int color) const {
  Graph out(host.vertex_count());
  for (size_t i = 0; i < domain.size(); ++i)
    if (colors[i] == color) out.add_edge(domain[i].u, domain[i].v);
  if (color == off_domain_color) {
    for (const Edge& e : host.edges())
      if (color_of(e) < 0) out.add_edge(e.u, e.v);
  }
  return out;
}

std::string Coloring::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto edges_json = [](const EdgeSet& es) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : es) arr.push_back({e.u, e.v});
    return arr;
  };
  j["domain"] = edges_json(domain);
  std::vector<EdgeSet> classes(static_cast<size_t>(num_colors));
  for (size_t i = 0; i < domain.size(); ++i)
    classes[static_cast<size_t>(colors[i])].push_back(domain[i]);
  if (num_colors == 2) {
    j["red"] = edges_json(classes[0]);
    j["blue"] = edges_json(classes[1]);
  } else {
    nlohmann::json by_color;
    for (int c = 0; c < num_colors; ++c)
      by_color[std::to_string(c + 1)] = edges_json(classes[c]);
    j["colors"] = by_color;
  }
  return j.dump(2);
}

Coloring Coloring::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Coloring out;
  out.n = j.at("n").get<int>();
  auto read_edges = [](const nlohmann::json& arr) {
    EdgeSet es;
    for (const auto& item : arr)
      es.push_back(Edge(item.at(0).get<int>(), item.at(1).get<int>()));
    std::sort(es.begin(), es.end());
    return es;
  };
  out.domain = read_edges(j.at("domain"));
  out.colors.assign(out.domain.size(), -1);
  auto apply = [&](const EdgeSet& es, int color) {
    for (const Edge& e : es) {
      auto it = std::lower_bound(out.domain.begin(), out.domain.end(), e);
      if (it == out.domain.end() || !(*it == e))
        throw std::invalid_argument("colored edge outside coloring domain");
      out.colors[static_cast<size_t>(it - out.domain.begin())] =
          static_cast<int8_t>(color);
    }
  };
  if (j.contains("colors")) {
    const auto& by_color = j.at("colors");
    out.num_colors = static_cast<int>(by_color.size());
    for (auto it = by_color.begin(); it != by_color.end(); ++it)
      apply(read_edges(it.value()), std::stoi(it.key()) - 1);
  } else {
    out.num_colors = 2;
    apply(read_edges(j.at("red")), 0);
    apply(read_edges(j.at("blue")), 1);
  }
  out.off_domain_color = out.num_colors - 1;
  for (int8_t c : out.colors)
    if (c < 0) throw std::invalid_argument("coloring not total on its domain");
  return out;
}

}  // namespace ramsey
