// Double-occurrence words, canonical forms, interlacement, and the graph
// layer. The enumeration oracle generates every pairing of 2n endpoints and
// partitions them into equivalence classes with its own rotation/reflection/
// relabel machinery, independent of the library's canonical_form.

#include <algorithm>
#include <array>
#include <set>

#include "doctest.h"
#include "khadeq/chord_diagram.hpp"
#include "khadeq/common.hpp"
#include "khadeq/graph.hpp"
#include "khadeq/scanner.hpp"

using namespace khadeq;

namespace {

using Word = std::vector<uint8_t>;

// all (2n-1)!! double-occurrence words in first-occurrence normal form
void all_pairings(Word& w, int open_mask, int next, int n,
                  std::vector<Word>& out) {
  if ((int)w.size() == 2 * n) {
    out.push_back(w);
    return;
  }
  for (int c = 0; c < next; ++c) {
    if (!(open_mask & (1 << c))) continue;
    w.push_back(static_cast<uint8_t>(c));
    all_pairings(w, open_mask & ~(1 << c), next, n, out);
    w.pop_back();
  }
  if (next < n) {
    w.push_back(static_cast<uint8_t>(next));
    all_pairings(w, open_mask | (1 << next), next + 1, n, out);
    w.pop_back();
  }
}

Word oracle_relabel(const Word& w) {
  std::array<int, 16> map;
  map.fill(-1);
  int next = 0;
  Word out;
  for (uint8_t s : w) {
    if (map[s] < 0) map[s] = next++;
    out.push_back(static_cast<uint8_t>(map[s]));
  }
  return out;
}

// least representative over all rotations and both directions
Word oracle_class_min(const Word& w) {
  Word best;
  Word cur = w;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t r = 0; r < cur.size(); ++r) {
      Word rot(cur.begin() + static_cast<long>(r), cur.end());
      rot.insert(rot.end(), cur.begin(), cur.begin() + static_cast<long>(r));
      Word norm = oracle_relabel(rot);
      if (best.empty() || norm < best) best = norm;
    }
    std::reverse(cur.begin(), cur.end());
  }
  return best;
}

ChordDiagram diagram(const Word& w) {
  ChordDiagram d;
  for (uint8_t s : w) d.word.push_back(std::to_string(int(s)));
  return d;
}

}  // namespace

TEST_CASE("enumeration agrees with the generate-all-then-dedup oracle") {
  const size_t expected_counts[] = {1, 2, 5, 17, 79};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Word> all;
    Word w;
    all_pairings(w, 0, 0, n, all);
    size_t dfact = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) dfact *= static_cast<size_t>(k);
    REQUIRE(all.size() == dfact);

    std::set<Word> classes;
    for (const auto& word : all) classes.insert(oracle_class_min(word));
    CHECK(classes.size() == expected_counts[n - 1]);

    auto enumerated = enumerate_chord_diagrams(n);
    CHECK(std::vector<Word>(classes.begin(), classes.end()) == enumerated);
    CHECK(enumerate_chord_diagrams_serial(n) == enumerated);
  }
  CHECK_THROWS_AS(enumerate_chord_diagrams(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_chord_diagrams(9), std::invalid_argument);
}

TEST_CASE("canonical form is invariant over the diagram's symmetries") {
  std::vector<Word> all;
  Word w;
  all_pairings(w, 0, 0, 4, all);
  for (const auto& word : all) {
    Word canon = canonical_form(word);
    CHECK(canonical_form(canon) == canon);
    Word rot(word.begin() + 1, word.end());
    rot.push_back(word[0]);
    CHECK(canonical_form(rot) == canon);
    Word rev(word.rbegin(), word.rend());
    CHECK(canonical_form(rev) == canon);
  }
}

TEST_CASE("interlacement detects exactly the alternating chord pairs") {
  CHECK(chords_interlace(0, 2, 1, 3));
  CHECK(!chords_interlace(0, 1, 2, 3));
  CHECK(!chords_interlace(0, 3, 1, 2));

  // 0 1 0 1: one crossing pair
  auto g1 = interlacement(diagram({0, 1, 0, 1}));
  CHECK(g1.edge_count() == 1);
  CHECK(g1.has_edge("0", "1"));
  // 0 0 1 1 and 0 1 1 0: none
  CHECK(interlacement(diagram({0, 0, 1, 1})).edge_count() == 0);
  CHECK(interlacement(diagram({0, 1, 1, 0})).edge_count() == 0);
  // 0 1 2 0 1 2: triangle
  CHECK(interlacement(diagram({0, 1, 2, 0, 1, 2})).edge_count() == 3);

  ChordDiagram bad;
  bad.word = {"0", "1", "0"};
  CHECK_THROWS_AS(validate(bad), ParseError);
}

TEST_CASE("interlacement is a cyclic/reflective invariant") {
  std::vector<Word> all;
  Word w;
  all_pairings(w, 0, 0, 4, all);
  for (const auto& word : all) {
    auto g = interlacement(diagram(word));
    Word rot(word.begin() + 3, word.end());
    rot.insert(rot.end(), word.begin(), word.begin() + 3);
    CHECK(interlacement(diagram(rot)) == g);
    Word rev(word.rbegin(), word.rend());
    CHECK(interlacement(diagram(rev)) == g);
  }
}

TEST_CASE("deleting a chord induces the subgraph on the rest") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& word : enumerate_chord_diagrams(n)) {
      auto g = interlacement(diagram(word));
      for (int victim = 0; victim < n; ++victim) {
        Word rest;
        for (uint8_t s : word)
          if (s != victim) rest.push_back(s);
        ChordDiagram d;
        for (uint8_t s : rest) d.word.push_back(std::to_string(int(s)));
        std::vector<std::string> keep;
        for (int c = 0; c < n; ++c)
          if (c != victim) keep.push_back(std::to_string(c));
        CHECK(interlacement(d) == induced_subgraph(g, keep));
      }
    }
  }
}

TEST_CASE("graph constructors and accessors") {
  Graph p = path_graph(3);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(p.has_edge("0", "1"));
  CHECK(!p.has_edge("0", "2"));

  Graph c = cycle_graph(4);
  CHECK(c.edge_count() == 4);
  CHECK(c.has_edge("0", "3"));
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

  CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), std::invalid_argument);

  Graph u = disjoint_union(path_graph(1), path_graph(1));
  CHECK(u.vertex_count() == 4);
  CHECK(u.edge_count() == 2);
  CHECK(u.has_edge("l.0", "l.1"));

  Graph mixed = disjoint_union(Graph({"x", "y"}, {{"x", "y"}}),
                               Graph({"a"}, {}));
  CHECK(mixed.vertex_count() == 3);  // no collision, labels untouched
  CHECK(mixed.has_edge("x", "y"));
}

TEST_CASE("two-coloring with odd-cycle witnesses") {
  auto even = is_bipartite(cycle_graph(6));
  CHECK(even.bipartite);
  for (const auto& [a, b] : cycle_graph(6).edges()) {
    CHECK(even.coloring.at(a) != even.coloring.at(b));
  }

  auto odd = is_bipartite(cycle_graph(7));
  CHECK(!odd.bipartite);
  REQUIRE(!odd.odd_cycle.empty());
  CHECK(odd.odd_cycle.size() % 2 == 1);
  Graph c7 = cycle_graph(7);
  for (size_t i = 0; i < odd.odd_cycle.size(); ++i) {
    const auto& a = odd.odd_cycle[i];
    const auto& b = odd.odd_cycle[(i + 1) % odd.odd_cycle.size()];
    CHECK(c7.has_edge(a, b));
  }

  CHECK(is_bipartite(Graph()).bipartite);
}

TEST_CASE("graph json round trip") {
  Graph g({"b", "a", "c"}, {{"a", "b"}, {"c", "a"}});
  auto j = graph_to_json(g);
  CHECK(j["vertices"] == nlohmann::json({"a", "b", "c"}));
  CHECK(graph_from_json(j) == g);
}
