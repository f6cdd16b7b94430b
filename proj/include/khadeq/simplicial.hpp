#ifndef KHADEQ_SIMPLICIAL_HPP
#define KHADEQ_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "khadeq/graph.hpp"

namespace khadeq {

// Abstract simplicial complex presented by its facets (maximal faces).
// Vertices are string-labeled and kept sorted; faces are bitmasks over that
// order. The complex with no vertices and a single empty face — the (-1)-
// sphere — is a legal value and the identity for join; a complex with no
// faces at all is rejected everywhere.
class SimplicialComplex {
 public:
  // S^{-1}: one empty facet, no vertices.
  static SimplicialComplex empty_complex();
  // Containment-reduces the input; throws std::invalid_argument when the
  // facet list is empty (the void complex).
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facets);
  // Same, but with an explicit vertex set (allows vertices the facets omit
  // — not used by independence complexes, where every vertex is coverable).
  static SimplicialComplex from_facets_on(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<uint64_t>& facet_masks() const { return facets_; }
  size_t facet_count() const { return facets_.size(); }
  std::vector<std::vector<std::string>> facets() const;
  bool is_empty_complex() const;
  int dimension() const;  // -1 for the empty complex

  // faces_by_dim()[k+1] = sorted bitmasks of the k-dimensional faces; index 0
  // holds the single empty face.
  std::vector<std::vector<uint64_t>> faces_by_dim() const;

  std::vector<std::string> face_labels(uint64_t mask) const;

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  std::vector<std::string> vertices_;  // sorted, unique
  std::vector<uint64_t> facets_;       // antichain, sorted
};

// Facets are the maximal independent sets of g; the graph with no vertices
// yields the empty complex.
SimplicialComplex independence_complex(const Graph& g);

// Simplicial join; vertex sets are kept disjoint by prefixing "l."/"r." when
// the label sets collide.  join(empty_complex(), x) == x.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

// Join with two fresh suspension points.
SimplicialComplex suspension(const SimplicialComplex& x);

// One facet per line, whitespace-separated vertex labels, '#' comments.
SimplicialComplex parse_facets(const std::string& text);

}  // namespace khadeq

#endif
