#ifndef KHADEQ_JONSSON_HPP
#define KHADEQ_JONSSON_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "khadeq/chord_diagram.hpp"
#include "khadeq/graph.hpp"
#include "khadeq/simplicial.hpp"

namespace khadeq {

// Bipartite graph on the vertices and facets of a complex, with an edge
// between vertex v and facet w exactly when v is not in w. Its independence
// complex is homotopy equivalent to the suspension of the input complex.
// Labels are prefixed "v:" / "f:" to keep the sides disjoint.
Graph jonsson_graph(const SimplicialComplex& y);

// Vertex separation pattern: four facets and three vertices with a_i lying
// in facet_i and in none of the other three facets. A complex containing
// this pattern has a non-circle Jonsson graph.
struct VSCWitness {
  std::array<std::vector<std::string>, 4> facets;  // facet 0 holds no a_i
  std::array<std::string, 3> vertices;
};
std::optional<VSCWitness> vsc_witness(const SimplicialComplex& y);

// The witness's seven vertices as they are labeled in jonsson_graph output;
// feeding this to RecognizeOptions::hints lets the recognizer test the
// predicted obstruction subgraph first.
std::vector<std::string> vsc_hint(const VSCWitness& w);

// Chord-diagram realization carrying the input's own vertex labels.
struct Realization {
  ChordDiagram word;
};
// Induced vertex subset exhaustively proven unrealizable.
struct NotCircleCertificate {
  std::vector<std::string> vertices;
};
struct Unknown {
  std::string reason;
};
using RecognitionResult =
    std::variant<Realization, NotCircleCertificate, Unknown>;

struct RecognizeOptions {
  int budget = 8;             // exhaustive-search vertex cap
  uint64_t max_nodes = 400'000'000;  // total search-node budget
  // candidate certificate subsets to try first (label lists)
  std::vector<std::vector<std::string>> hints;
  bool parallel = true;
};

// Exact decision for graphs within the budget; for larger graphs, searches
// induced subgraphs for an unrealizable certificate (separation-pattern
// subsets first) and reports Unknown when the budget runs out undecided.
RecognitionResult recognize_circle_graph(const Graph& g,
                                         const RecognizeOptions& opts = {});

// Serial reference for the exhaustive word search; used by tests and the
// benchmark as the baseline for the parallel search. Returns a realization
// if one exists.
std::optional<std::vector<std::string>> find_realization_serial(const Graph& g,
                                                                uint64_t max_nodes,
                                                                bool* exhausted);

// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2_complex();

nlohmann::ordered_json recognition_to_json(const RecognitionResult& r);
nlohmann::ordered_json vsc_to_json(const std::optional<VSCWitness>& w);

}  // namespace khadeq

#endif
