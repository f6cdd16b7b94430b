// khadeq: Khovanov A-adequacy via independence complexes of Lando graphs.
//
// Subcommands: adequacy, lando, homology, jonsson, recognize, family, scan.
// Exit codes: 0 success, 1 input error, 2 search budget exhausted (unknown).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "khadeq/adequacy.hpp"
#include "khadeq/braid.hpp"
#include "khadeq/common.hpp"
#include "khadeq/families.hpp"
#include "khadeq/graph.hpp"
#include "khadeq/homology.hpp"
#include "khadeq/jonsson.hpp"
#include "khadeq/resolution.hpp"
#include "khadeq/scanner.hpp"
#include "khadeq/simplicial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace khadeq;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

std::string stem(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() &&
         s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

AdequacyReport report_for_path(const std::string& path,
                               const std::string& name) {
  std::string text = read_file(path);
  std::string label = name.empty() ? stem(path) : name;
  if (has_suffix(path, ".chd"))
    return adequacy_report_state(parse_chd(text), label);
  return adequacy_report(closure(parse_braid(text)), label);
}

void apply_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

std::string render_groups(const AbelianGroupSequence& h) {
  std::ostringstream ss;
  bool any = false;
  for (const auto& [deg, grp] : h.nontrivial()) {
    ss << "H̃_" << deg << " = " << grp.to_string() << "\n";
    any = true;
  }
  if (!any) ss << "all reduced homology groups trivial\n";
  return ss.str();
}

std::string render_graph(const Graph& g) {
  std::ostringstream ss;
  ss << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  ss << "vertices:";
  for (const auto& v : g.vertices()) ss << " " << v;
  ss << "\nedges:";
  for (const auto& [a, b] : g.edges()) ss << " " << a << "-" << b;
  ss << "\n";
  return ss.str();
}

std::string render_recognition(const RecognitionResult& r) {
  std::ostringstream ss;
  if (const auto* real = std::get_if<Realization>(&r)) {
    ss << "circle graph; realization:";
    for (const auto& t : real->word.word) ss << " " << t;
    ss << "\n";
  } else if (const auto* cert = std::get_if<NotCircleCertificate>(&r)) {
    ss << "not a circle graph; unrealizable induced subgraph:";
    for (const auto& v : cert->vertices) ss << " " << v;
    ss << "\n";
  } else {
    ss << "unknown: " << std::get<Unknown>(r).reason << "\n";
  }
  return ss.str();
}

int run_adequacy(const std::string& input, const std::string& name,
                 const std::string& format, const std::string& out) {
  AdequacyReport r = report_for_path(input, name);
  if (format == "json")
    emit(report_to_json(r).dump(2), out);
  else
    emit(report_to_text(r), out);
  return 0;
}

int run_lando(const std::string& input, const std::string& format,
              const std::string& out) {
  std::string text = read_file(input);
  Graph lando = has_suffix(input, ".chd")
                    ? lando_graph(parse_chd(text).res)
                    : lando_graph(resolve_A(closure(parse_braid(text))));
  bool bip = is_bipartite(lando).bipartite;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["lando"] = graph_to_json(lando);
    j["bipartite"] = bip;
    emit(j.dump(2), out);
  } else {
    std::ostringstream ss;
    ss << "lando graph: " << render_graph(lando);
    ss << "bipartite: " << (bip ? "yes" : "no") << "\n";
    emit(ss.str(), out);
  }
  return 0;
}

int run_homology(const std::string& input, const std::string& format,
                 const std::string& out) {
  SimplicialComplex y = parse_facets(read_file(input));
  AbelianGroupSequence h = reduced_homology(y);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["vertices"] = y.vertices().size();
    j["facets"] = y.facets().size();
    j["homology"] = sequence_to_json(h);
    auto wedge = wedge_profile(h);
    j["wedge_profile"] = wedge ? nlohmann::ordered_json(*wedge)
                               : nlohmann::ordered_json(nullptr);
    emit(j.dump(2), out);
  } else {
    emit(render_groups(h), out);
  }
  return 0;
}

int run_jonsson(const std::string& input, const std::string& format,
                const std::string& out, int budget, uint64_t max_nodes,
                int jobs) {
  SimplicialComplex y = parse_facets(read_file(input));
  Graph g = jonsson_graph(y);
  auto witness = vsc_witness(y);
  RecognizeOptions opts;
  opts.budget = budget;
  opts.max_nodes = max_nodes;
  opts.parallel = jobs != 1;
  apply_jobs(jobs);
  if (witness) opts.hints.push_back(vsc_hint(*witness));
  RecognitionResult rec = recognize_circle_graph(g, opts);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["graph"] = graph_to_json(g);
    j["vsc_witness"] = vsc_to_json(witness);
    j["recognition"] = recognition_to_json(rec);
    emit(j.dump(2), out);
  } else {
    std::ostringstream ss;
    ss << "graph: " << render_graph(g);
    if (witness) {
      ss << "vertex separation pattern: facets";
      for (const auto& f : witness->facets) ss << " {" << join_strings(f, ",") << "}";
      ss << "; vertices";
      for (const auto& v : witness->vertices) ss << " " << v;
      ss << "\n";
    } else {
      ss << "vertex separation pattern: none\n";
    }
    ss << render_recognition(rec);
    emit(ss.str(), out);
  }
  return std::holds_alternative<Unknown>(rec) ? 2 : 0;
}

int run_recognize(const std::string& input, const std::string& format,
                  const std::string& out, int budget, uint64_t max_nodes,
                  int jobs) {
  Graph g = graph_from_json(nlohmann::json::parse(read_file(input)));
  RecognizeOptions opts;
  opts.budget = budget;
  opts.max_nodes = max_nodes;
  opts.parallel = jobs != 1;
  apply_jobs(jobs);
  RecognitionResult rec = recognize_circle_graph(g, opts);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["recognition"] = recognition_to_json(rec);
    emit(j.dump(2), out);
  } else {
    emit(render_recognition(rec), out);
  }
  return std::holds_alternative<Unknown>(rec) ? 2 : 0;
}

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> params;
  if (text.empty()) return params;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected k=v in --params, got '" + item +
                                  "'");
    params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  return params;
}

int run_family(const std::string& name, const std::string& params_text,
               const std::string& format, const std::string& out) {
  FamilySpec f = family_spec(name, parse_params(params_text));
  if (format == "json") {
    emit(family_to_json(f).dump(2), out);
    return 0;
  }
  std::ostringstream ss;
  ss << "family " << f.family;
  for (const auto& [k, v] : f.params) ss << " " << k << "=" << v;
  ss << "\n";
  if (f.word) ss << "--- braid ---\n" << braid_to_string(*f.word);
  if (f.chd) ss << "--- state ---\n" << *f.chd;
  ss << "--- expected ---\n";
  switch (f.lando.kind) {
    case LandoPattern::Empty:
      ss << "lando graph: empty\n";
      break;
    case LandoPattern::Cycle:
      ss << "lando graph: cycle of length " << f.lando.cycle_length << "\n";
      break;
    case LandoPattern::Stars:
      ss << "lando graph: " << f.lando.star_count << " stars with "
         << f.lando.star_rays << " rays\n";
      break;
  }
  ss << render_groups(f.predicted_homology);
  emit(ss.str(), out);
  return 0;
}

int run_scan(int max_chords, bool bipartite_only, const std::string& checkpoint,
             int jobs, const std::string& format, const std::string& out) {
  ScanParams params;
  params.max_chords = max_chords;
  params.bipartite_only = bipartite_only;
  params.checkpoint = checkpoint;
  params.jobs = jobs;
  ScanSummary s = torsion_scan(params);
  std::cerr << "scan: " << s.records_computed << " records computed in "
            << s.wall_ms << " ms\n";
  if (format == "json") {
    emit(summary_to_json(s, params).dump(2), out);
    return 0;
  }
  std::ostringstream ss;
  ss << "chords  classes  bipartite  torsion\n";
  for (const auto& [n, st] : s.per_n) {
    ss << std::setw(6) << n << std::setw(9) << st.classes << std::setw(11)
       << st.bipartite << std::setw(9) << st.torsion_hits << "\n";
  }
  if (s.findings.empty()) {
    ss << "no torsion found\n";
  } else {
    ss << "torsion findings:\n";
    for (const auto& r : s.findings)
      ss << "  " << symbols_to_string(r.word) << "\n";
  }
  emit(ss.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Khovanov A-adequacy via independence complexes of Lando graphs"};
  app.require_subcommand(1);

  std::string input, name, out;
  std::string format = "text";
  int budget = 8, jobs = 0, max_chords = 6;
  uint64_t max_nodes = 400'000'000;
  bool bipartite_only = false;
  std::string checkpoint, params_text, family_name;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("-o,--output", out, "write the report to a file");
  };

  auto* adequacy = app.add_subcommand(
      "adequacy", "decide adequacy and extreme Khovanov homology of a diagram");
  adequacy->add_option("input", input, "braid (.brd) or state (.chd) file")
      ->required();
  adequacy->add_option("--name", name, "diagram name used in the report");
  add_common(adequacy);

  auto* lando = app.add_subcommand("lando", "Lando graph of the all-A state");
  lando->add_option("input", input, "braid (.brd) or state (.chd) file")
      ->required();
  add_common(lando);

  auto* homology = app.add_subcommand(
      "homology", "reduced homology of a simplicial complex (.fct)");
  homology->add_option("input", input, "facet list file")->required();
  add_common(homology);

  auto* jonsson = app.add_subcommand(
      "jonsson",
      "bipartite suspension graph of a complex, separation pattern, and "
      "circle-graph recognition");
  jonsson->add_option("input", input, "facet list file")->required();
  jonsson->add_option("--budget", budget, "exhaustive-search vertex cap");
  jonsson->add_option("--max-nodes", max_nodes, "search node budget");
  jonsson->add_option("--jobs", jobs, "worker threads (0 = all, 1 = serial)");
  add_common(jonsson);

  auto* recognize =
      app.add_subcommand("recognize", "circle-graph recognition (graph JSON)");
  recognize->add_option("input", input, "graph JSON file")->required();
  recognize->add_option("--budget", budget, "exhaustive-search vertex cap");
  recognize->add_option("--max-nodes", max_nodes, "search node budget");
  recognize->add_option("--jobs", jobs, "worker threads (0 = all, 1 = serial)");
  add_common(recognize);

  auto* family = app.add_subcommand(
      "family", "braid/state generators with predicted Lando graph shape");
  family
      ->add_option("name", family_name,
                   "torus | negative-torus | twisted | f | cable")
      ->required();
  family->add_option("--params", params_text, "comma-separated k=v, e.g. m=6,n=3");
  add_common(family);

  auto* scan = app.add_subcommand(
      "scan", "enumerate chord diagrams and search their independence-complex "
              "homology for torsion");
  scan->add_option("--max-chords", max_chords, "largest chord count (<= 8)");
  scan->add_flag("--bipartite-only", bipartite_only,
                 "only scan diagrams with bipartite interlacement");
  scan->add_option("--checkpoint", checkpoint, "resumable record file");
  scan->add_option("--jobs", jobs, "worker threads (0 = all, 1 = serial)");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*adequacy) return run_adequacy(input, name, format, out);
    if (*lando) return run_lando(input, format, out);
    if (*homology) return run_homology(input, format, out);
    if (*jonsson)
      return run_jonsson(input, format, out, budget, max_nodes, jobs);
    if (*recognize)
      return run_recognize(input, format, out, budget, max_nodes, jobs);
    if (*family) return run_family(family_name, params_text, format, out);
    if (*scan)
      return run_scan(max_chords, bipartite_only, checkpoint, jobs, format,
                      out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
