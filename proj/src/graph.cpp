#include "khadeq/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "khadeq/common.hpp"

namespace khadeq {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (vertices.size() > max_vertices)
    throw std::invalid_argument("graph exceeds " +
                                std::to_string(max_vertices) + " vertices");
  labels_ = std::move(vertices);
  adj_.assign(labels_.size(), 0);
  for (const auto& [a, b] : edges) {
    size_t i = index_of(a);
    size_t j = index_of(b);
    if (i == j) throw std::invalid_argument("loop edge at vertex " + a);
    adj_[i] |= uint64_t{1} << j;
    adj_[j] |= uint64_t{1} << i;
  }
}

size_t Graph::edge_count() const {
  size_t twice = 0;
  for (uint64_t m : adj_) twice += static_cast<size_t>(__builtin_popcountll(m));
  return twice / 2;
}

bool Graph::has_vertex(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

size_t Graph::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw std::invalid_argument("unknown vertex " + label);
  return static_cast<size_t>(it - labels_.begin());
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
  size_t i = index_of(a);
  size_t j = index_of(b);
  return (adj_[i] >> j) & 1;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if ((adj_[i] >> j) & 1) out.emplace_back(labels_[i], labels_[j]);
  // labels_ is sorted, so this ordering is already canonical
  return out;
}

Graph path_graph(int n) {
  if (n < 0) throw std::invalid_argument("path_graph needs n >= 0");
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Graph(verts, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
  return Graph(verts, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  bool collide = false;
  for (const auto& v : a.vertices())
    if (b.has_vertex(v)) collide = true;
  auto tag = [&](const Graph& g, const std::string& prefix) {
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& v : g.vertices())
      verts.push_back(collide ? prefix + v : v);
    for (const auto& [x, y] : g.edges())
      edges.emplace_back(collide ? prefix + x : x, collide ? prefix + y : y);
    return std::make_pair(verts, edges);
  };
  auto [va, ea] = tag(a, "l.");
  auto [vb, eb] = tag(b, "r.");
  va.insert(va.end(), vb.begin(), vb.end());
  ea.insert(ea.end(), eb.begin(), eb.end());
  return Graph(va, ea);
}

Graph induced_subgraph(const Graph& g,
                       const std::vector<std::string>& keep) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (keep[i] != keep[j] && g.has_edge(keep[i], keep[j]))
        edges.emplace_back(keep[i], keep[j]);
  for (const auto& v : keep) g.index_of(v);  // validate membership
  return Graph(keep, edges);
}

std::vector<Graph> connected_components(const Graph& g) {
  const size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Graph> out;
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::string> labels;
    std::vector<size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      labels.push_back(g.vertices()[v]);
      uint64_t m = g.adjacency_mask(v);
      while (m) {
        size_t u = static_cast<size_t>(std::countr_zero(m));
        m &= m - 1;
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(labels.begin(), labels.end());
    out.push_back(induced_subgraph(g, labels));
  }
  return out;
}

BipartiteCheck is_bipartite(const Graph& g) {
  BipartiteCheck out;
  size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<size_t> parent(n, SIZE_MAX);
  for (size_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<size_t> queue{root};
    while (!queue.empty()) {
      size_t u = queue.front();
      queue.pop_front();
      uint64_t m = g.adjacency_mask(u);
      while (m) {
        size_t v = static_cast<size_t>(__builtin_ctzll(m));
        m &= m - 1;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // walk both endpoints to the root, trim the shared tail
          std::vector<size_t> pu{u}, pv{v};
          for (size_t x = u; parent[x] != SIZE_MAX; x = parent[x])
            pu.push_back(parent[x]);
          for (size_t x = v; parent[x] != SIZE_MAX; x = parent[x])
            pv.push_back(parent[x]);
          while (pu.size() > 1 && pv.size() > 1 &&
                 pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          out.bipartite = false;
          for (size_t x : pu) out.odd_cycle.push_back(g.vertices()[x]);
          for (size_t k = pv.size() - 1; k > 0; --k)
            out.odd_cycle.push_back(g.vertices()[pv[k - 1]]);
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  for (size_t i = 0; i < n; ++i) out.coloring[g.vertices()[i]] = color[i];
  return out;
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges())
    edges.push_back(nlohmann::ordered_json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph json needs 'vertices' and 'edges'");
  std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("graph edge must be a pair");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph(verts, edges);
}

}  // namespace khadeq
