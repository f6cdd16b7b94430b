// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL
// line; the binary exits nonzero when anything fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "khadeq/adequacy.hpp"
#include "khadeq/chord_diagram.hpp"
#include "khadeq/families.hpp"
#include "khadeq/homology.hpp"
#include "khadeq/jonsson.hpp"
#include "khadeq/resolution.hpp"
#include "khadeq/scanner.hpp"

using namespace khadeq;
namespace fs = std::filesystem;

namespace {

struct Checker {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& note) {
    if (!cond && ok) {
      ok = false;
      why = note;
    }
  }
};

AbelianGroupSequence one_z(int degree) {
  AbelianGroupSequence s;
  s.set(degree, {1, {}});
  return s;
}

Graph lando_of(const BraidWord& w) {
  return lando_graph(resolve_A(closure(w)));
}

AbelianGroupSequence lando_homology(const BraidWord& w) {
  return independence_homology(lando_of(w));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- criteria --------------------------------------------------------------

void closed_form_tables(Checker& c) {
  for (int n = 1; n <= 15; ++n)
    c.expect(reduced_homology(independence_complex(path_graph(n))) ==
                 path_homology(n),
             "path with " + std::to_string(n) + " edges");
  for (int n = 3; n <= 15; ++n)
    c.expect(reduced_homology(independence_complex(cycle_graph(n))) ==
                 cycle_homology(n),
             "cycle of length " + std::to_string(n));
}

void negative_torus_family(Checker& c) {
  for (int r = 3; r <= 7; ++r) {
    BraidWord w = negative_torus_braid(r);
    LandoPattern cyc{LandoPattern::Cycle, 2 * r, 0, 0};
    c.expect(matches_pattern(lando_of(w), cyc),
             "r=" + std::to_string(r) + ": smoothing graph is not a " +
                 std::to_string(2 * r) + "-cycle");
    c.expect(lando_homology(w) == cycle_homology(2 * r),
             "r=" + std::to_string(r) + ": homology mismatch");
  }
}

void f_family_criterion(Checker& c) {
  for (int s : {5, 7}) {
    for (int r = 2; r <= 5; ++r) {
      std::string tag = "(s,r)=(" + std::to_string(s) + "," +
                        std::to_string(r) + ")";
      LinkDiagram d = closure(f_family(s, r));
      LandoPattern cyc{LandoPattern::Cycle, 2 * r, 0, 0};
      c.expect(matches_pattern(lando_graph(resolve_A(d)), cyc),
               tag + ": smoothing graph is not a 2r-cycle");
      c.expect(is_B_adequate(d), tag + ": not B-adequate");
      c.expect(!is_A_adequate(d), tag + ": unexpectedly A-adequate");
      c.expect(is_khovanov_A_adequate(d), tag + ": extreme group vanishes");
    }
  }
}

void twisted_family(Checker& c) {
  for (int m = 6; m <= 10; ++m) {
    for (int n = 3; n <= 4; ++n) {
      std::string tag = "(m,n)=(" + std::to_string(m) + "," +
                        std::to_string(n) + ")";
      c.expect(lando_homology(twisted_word(m, n)) == one_z(m / 2 - 1),
               tag + ": extreme homology is not Z in degree m/2-1");
    }
  }
  LinkDiagram d = closure(twisted_word(6, 3));
  LandoPattern stars{LandoPattern::Stars, 0, 3, 3};
  c.expect(matches_pattern(lando_graph(resolve_A(d)), stars),
           "(6,3): smoothing graph is not three 3-ray stars");
  auto extreme = extreme_khovanov(d);
  c.expect(extreme.size() == 1 && extreme.count(0) &&
               extreme.at(0) == AbelianGroup{1, {}},
           "(6,3): extreme group is not Z at homological grading 0");
}

void cable_fixture(Checker& c) {
  DiagramState s = parse_chd(cable_fixture_chd());
  AdequacyReport r = adequacy_report_state(s, "cable");
  LandoPattern c4{LandoPattern::Cycle, 4, 0, 0};
  c.expect(matches_pattern(r.lando, c4), "smoothing graph is not a 4-cycle");
  c.expect(reduced_homology(independence_complex(r.lando)) == one_z(0),
           "homology is not Z in degree 0");
  c.expect(!r.a_adequate, "unexpectedly A-adequate");
  c.expect(r.khovanov_a_adequate, "extreme group vanishes");
}

void projective_plane_pipeline(Checker& c) {
  SimplicialComplex y = rp2_complex();
  AbelianGroupSequence hy = reduced_homology(y);
  AbelianGroupSequence want;
  want.set(1, {0, {2}});
  c.expect(hy == want, "triangulation homology is not Z/2 in degree 1");

  Graph g = jonsson_graph(y);
  c.expect(g.vertex_count() == 16, "graph does not have 16 vertices");
  c.expect(g.edge_count() == 30, "graph does not have 30 edges");
  c.expect(is_bipartite(g).bipartite, "graph is not bipartite");

  AbelianGroupSequence hi = reduced_homology(independence_complex(g));
  AbelianGroupSequence shifted;
  shifted.set(2, {0, {2}});
  c.expect(hi == shifted,
           "independence-complex homology is not Z/2 in degree 2 only");

  auto w = vsc_witness(y);
  c.expect(w.has_value(), "no separation witness found");
  if (!w) return;

  RecognizeOptions opts;
  opts.hints = {vsc_hint(*w)};
  RecognitionResult rec = recognize_circle_graph(g, opts);
  const auto* cert = std::get_if<NotCircleCertificate>(&rec);
  c.expect(cert != nullptr, "recognizer did not prove the graph non-circle");
  if (cert)
    c.expect(cert->vertices.size() <= 7,
             "certificate has more than 7 vertices");
}

void tetrahedron_counterpoint(Checker& c) {
  SimplicialComplex y = SimplicialComplex::from_facets(
      {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
  Graph g = jonsson_graph(y);
  c.expect(g.vertex_count() == 8 && g.edge_count() == 4,
           "graph is not four disjoint edges (size)");
  bool all_deg_one = true;
  for (size_t v = 0; v < g.vertex_count(); ++v)
    if (std::popcount(g.adjacency_mask(v)) != 1) all_deg_one = false;
  c.expect(all_deg_one, "graph is not four disjoint edges (degrees)");

  RecognitionResult rec = recognize_circle_graph(g);
  const auto* real = std::get_if<Realization>(&rec);
  c.expect(real != nullptr, "recognizer found no realization");
  if (real)
    c.expect(interlacement(real->word) == g,
             "realization does not interlace back to the graph");

  c.expect(reduced_homology(independence_complex(g)) == one_z(3),
           "independence-complex homology is not Z in degree 3");
  c.expect(!vsc_witness(y).has_value(),
           "unexpected separation witness on the tetrahedron");
}

SimplicialComplex random_complex(std::mt19937& rng) {
  static const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<size_t> nverts(1, pool.size());
  size_t k = nverts(rng);
  std::uniform_int_distribution<int> nfacets(1, 5);
  std::uniform_int_distribution<size_t> pick(0, k - 1);
  std::uniform_int_distribution<int> width(1, 4);
  std::vector<std::vector<std::string>> facets;
  int m = nfacets(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<std::string> f;
    int w = width(rng);
    for (int j = 0; j < w; ++j) f.push_back(pool[pick(rng)]);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

void property_suites(Checker& c) {
  // (a)+(b): suspension shift and the vertex/facet-construction shift, on a
  // corpus that includes one complex with torsion
  std::mt19937 rng(461158u);
  std::vector<SimplicialComplex> corpus{rp2_complex()};
  while (corpus.size() < 50) corpus.push_back(random_complex(rng));
  for (size_t t = 0; t < corpus.size(); ++t) {
    const auto& y = corpus[t];
    AbelianGroupSequence base = reduced_homology(y);
    AbelianGroupSequence up = reduced_homology(suspension(y));
    AbelianGroupSequence jj =
        reduced_homology(independence_complex(jonsson_graph(y)));
    for (int k = -1; k <= 8; ++k) {
      c.expect(up.at(k + 1) == base.at(k),
               "suspension shift fails on corpus complex " +
                   std::to_string(t));
      c.expect(jj.at(k + 1) == base.at(k),
               "construction shift fails on corpus complex " +
                   std::to_string(t));
    }
    c.expect(up.at(-1).trivial(), "suspension keeps a (-1)-group");
  }

  // (c): recognizer round-trip over every canonical word with <= 5 chords
  for (int n = 1; n <= 5; ++n) {
    for (const auto& word : enumerate_chord_diagrams(n)) {
      ChordDiagram d;
      for (uint8_t s : word) d.word.push_back(std::to_string(int(s)));
      Graph g = interlacement(d);
      RecognitionResult rec = recognize_circle_graph(g);
      const auto* real = std::get_if<Realization>(&rec);
      c.expect(real != nullptr,
               "no realization for word " + symbols_to_string(word));
      if (real)
        c.expect(interlacement(real->word) == g,
                 "round-trip mismatch for word " + symbols_to_string(word));
    }
  }

  // (d): independence complex turns disjoint union into join, exactly
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& word : enumerate_chord_diagrams(n)) {
      ChordDiagram d;
      for (uint8_t s : word) d.word.push_back(std::to_string(int(s)));
      graphs.push_back(interlacement(d));
    }
  }
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = 0; j < graphs.size(); ++j)
      c.expect(independence_complex(disjoint_union(graphs[i], graphs[j])) ==
                   join(independence_complex(graphs[i]),
                        independence_complex(graphs[j])),
               "join identity fails on graph pair " + std::to_string(i) +
                   "," + std::to_string(j));
}

void conjecture_scan(Checker& c) {
  auto tmp = [](const char* name) {
    fs::path p = fs::temp_directory_path() / name;
    fs::remove(p);
    return p;
  };
  ScanParams params;
  params.max_chords = 6;
  params.bipartite_only = true;
  params.checkpoint = tmp("khadeq_accept_scan_a.jsonl").string();

  ScanSummary first = torsion_scan(params);
  c.expect(first.findings.empty(), "scan reported torsion findings");
  for (const auto& [n, stats] : first.per_n)
    c.expect(stats.torsion_hits == 0,
             "torsion hits at " + std::to_string(n) + " chords");

  // every stored record: no torsion, homology is a wedge of spheres
  std::string bytes = slurp(params.checkpoint);
  std::istringstream lines(bytes);
  std::string line;
  bool first_line = true;
  long long records = 0;
  while (std::getline(lines, line)) {
    if (first_line) {
      first_line = false;
      continue;
    }
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    c.expect(j.at("torsion").get<bool>() == false,
             "record with torsion: " + j.at("word").get<std::string>());
    auto h = sequence_from_json(j.at("homology"));
    c.expect(wedge_profile(h).has_value(),
             "record without a wedge profile: " +
                 j.at("word").get<std::string>());
    ++records;
  }
  c.expect(records == first.records_computed, "record count mismatch");

  // determinism: a second full run writes the identical file
  ScanParams again = params;
  again.checkpoint = tmp("khadeq_accept_scan_b.jsonl").string();
  ScanSummary second = torsion_scan(again);
  c.expect(summary_to_json(first, params) == summary_to_json(second, again),
           "summaries differ between identical runs");
  c.expect(slurp(again.checkpoint) == bytes, "checkpoints differ");

  // determinism across an interrupt: truncate mid-record, resume
  ScanParams resumed = params;
  resumed.checkpoint = tmp("khadeq_accept_scan_c.jsonl").string();
  size_t cut = bytes.size() * 3 / 5;
  while (cut > 0 && bytes[cut - 1] == '\n') --cut;
  {
    std::ofstream out(resumed.checkpoint, std::ios::binary);
    out << bytes.substr(0, cut);
  }
  ScanSummary third = torsion_scan(resumed);
  c.expect(summary_to_json(first, params) == summary_to_json(third, resumed),
           "summary changed after resume");
  c.expect(slurp(resumed.checkpoint) == bytes,
           "resumed checkpoint is not byte-identical");

  fs::remove(params.checkpoint);
  fs::remove(again.checkpoint);
  fs::remove(resumed.checkpoint);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria{
      {"independence-complex homology of paths and cycles matches the closed"
       " forms",
       closed_form_tables},
      {"negative torus closures give 2r-cycle smoothing graphs with the"
       " predicted homology",
       negative_torus_family},
      {"family f: 2r-cycle smoothing graphs, B-adequate, not A-adequate,"
       " extreme group nonzero",
       f_family_criterion},
      {"family twisted: extreme homology Z in degree m/2-1; stars and i=0 at"
       " (6,3)",
       twisted_family},
      {"cable fixture: 4-cycle smoothing graph, Z in degree 0, extreme group"
       " nonzero without A-adequacy",
       cable_fixture},
      {"projective-plane pipeline: torsion survives to the bipartite"
       " construction and blocks realizability",
       projective_plane_pipeline},
      {"tetrahedron boundary: four disjoint edges, realizable, 3-sphere"
       " homology, no separation witness",
       tetrahedron_counterpoint},
      {"property suites: suspension/construction shifts, recognizer"
       " round-trips, join identity",
       property_suites},
      {"six-chord bipartite torsion scan: torsion-free wedge profiles,"
       " deterministic across runs and resume",
       conjecture_scan},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("%s — %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", cr.name, secs);
    if (!c.ok) {
      std::printf("       %s\n", c.why.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
