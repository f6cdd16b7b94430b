#ifndef KHADEQ_GRAPH_HPP
#define KHADEQ_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace khadeq {

// Finite undirected graph on string-labeled vertices. Labels are kept sorted
// so serializations and equality are canonical; algorithms work on bitmask
// adjacency, which caps the graph at 64 vertices (plenty for the desk-scale
// objects handled here).
class Graph {
 public:
  static constexpr size_t max_vertices = 64;

  Graph() = default;
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  size_t vertex_count() const { return labels_.size(); }
  size_t edge_count() const;
  const std::vector<std::string>& vertices() const { return labels_; }
  bool has_vertex(const std::string& label) const;
  size_t index_of(const std::string& label) const;  // throws if absent
  bool has_edge(const std::string& a, const std::string& b) const;
  uint64_t adjacency_mask(size_t v) const { return adj_[v]; }
  // Edges as sorted pairs, sorted lexicographically.
  std::vector<std::pair<std::string, std::string>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::string> labels_;  // sorted, unique
  std::vector<uint64_t> adj_;        // adj_[i] bit j <=> edge {i,j}
};

Graph path_graph(int n);   // path with n edges on n+1 vertices, n >= 0
Graph cycle_graph(int n);  // n-cycle, n >= 3
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);
// Induced subgraphs on the connected components, ordered by smallest label.
std::vector<Graph> connected_components(const Graph& g);

struct BipartiteCheck {
  bool bipartite = false;
  std::map<std::string, int> coloring;  // two-coloring when bipartite
  std::vector<std::string> odd_cycle;   // witness cycle when not
};
BipartiteCheck is_bipartite(const Graph& g);

nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace khadeq

#endif
