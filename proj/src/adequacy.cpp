#include "khadeq/adequacy.hpp"

#include <sstream>

#include "khadeq/simplicial.hpp"

namespace khadeq {

bool is_A_adequate(const LinkDiagram& d) {
  return lando_graph(resolve_A(d)).vertex_count() == 0;
}

bool is_B_adequate(const LinkDiagram& d) { return is_A_adequate(mirror(d)); }

std::map<int, AbelianGroup> extreme_khovanov_state(int neg_crossings,
                                                   const StateResolution& res) {
  auto coh = cohomology_from_homology(independence_homology(lando_graph(res)));
  std::map<int, AbelianGroup> out;
  for (const auto& [deg, g] : coh.nontrivial())
    out[deg + 1 - neg_crossings] = g;
  return out;
}

std::map<int, AbelianGroup> extreme_khovanov(const LinkDiagram& d) {
  return extreme_khovanov_state(d.n(), resolve_A(d));
}

bool is_khovanov_A_adequate(const LinkDiagram& d) {
  return !extreme_khovanov(d).empty();
}

namespace {

AdequacyReport build_report(const std::string& name, int p, int n,
                            const StateResolution& res,
                            std::optional<bool> b_adequate) {
  AdequacyReport r;
  r.diagram = name;
  r.p = p;
  r.n = n;
  r.circles = res.num_circles();
  r.j_min = p - 2 * n - res.num_circles();
  r.lando = lando_graph(res);
  r.a_adequate = r.lando.vertex_count() == 0;
  r.b_adequate = b_adequate;
  r.lando_bipartite = is_bipartite(r.lando).bipartite;
  auto coh = cohomology_from_homology(independence_homology(r.lando));
  for (const auto& [deg, g] : coh.nontrivial()) r.extreme[deg + 1 - n] = g;
  r.khovanov_a_adequate = !r.extreme.empty();
  AbelianGroupSequence seq;
  for (const auto& [i, g] : r.extreme) seq.set(i, g);
  r.wedge = wedge_profile(seq);
  return r;
}

}  // namespace

AdequacyReport adequacy_report(const LinkDiagram& d, const std::string& name) {
  return build_report(name, d.p(), d.n(), resolve_A(d), is_B_adequate(d));
}

AdequacyReport adequacy_report_state(const DiagramState& s,
                                     const std::string& name) {
  return build_report(name, s.p, s.n, s.res, std::nullopt);
}

nlohmann::ordered_json report_to_json(const AdequacyReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["diagram"] = r.diagram;
  j["p"] = r.p;
  j["n"] = r.n;
  j["circles"] = r.circles;
  j["j_min"] = r.j_min;
  j["a_adequate"] = r.a_adequate;
  if (r.b_adequate)
    j["b_adequate"] = *r.b_adequate;
  else
    j["b_adequate"] = nullptr;
  nlohmann::ordered_json lando = graph_to_json(r.lando);
  lando["bipartite"] = r.lando_bipartite;
  j["lando"] = std::move(lando);
  nlohmann::ordered_json extreme = nlohmann::ordered_json::object();
  for (const auto& [i, g] : r.extreme) extreme[std::to_string(i)] = g.to_string();
  j["extreme"] = std::move(extreme);
  j["khovanov_a_adequate"] = r.khovanov_a_adequate;
  if (r.wedge)
    j["wedge_profile"] = *r.wedge;
  else
    j["wedge_profile"] = nullptr;
  return j;
}

std::string report_to_text(const AdequacyReport& r) {
  // render from the json facts so both formats always agree
  auto j = report_to_json(r);
  std::ostringstream out;
  out << "diagram: " << j["diagram"].get<std::string>() << "\n";
  out << "crossings: " << r.p << " positive, " << r.n << " negative\n";
  out << "all-A state circles: " << r.circles << "\n";
  out << "j_min: " << r.j_min << "\n";
  out << "A-adequate: " << (r.a_adequate ? "yes" : "no") << "\n";
  if (r.b_adequate)
    out << "B-adequate: " << (*r.b_adequate ? "yes" : "no") << "\n";
  else
    out << "B-adequate: unknown (state fixture)\n";
  out << "Lando graph: " << r.lando.vertex_count() << " vertices, "
      << r.lando.edge_count() << " edges, "
      << (r.lando_bipartite ? "bipartite" : "not bipartite") << "\n";
  out << "extreme Khovanov groups (quantum grading " << r.j_min << "):\n";
  if (r.extreme.empty()) out << "  all trivial\n";
  for (const auto& [i, g] : r.extreme)
    out << "  i=" << i << ": " << g.to_string() << "\n";
  out << "Khovanov A-adequate: " << (r.khovanov_a_adequate ? "yes" : "no")
      << "\n";
  if (r.wedge) {
    out << "wedge profile: spheres of dimension [";
    for (size_t k = 0; k < r.wedge->size(); ++k)
      out << (k ? " " : "") << (*r.wedge)[k];
    out << "]\n";
  } else {
    out << "wedge profile: none (torsion present)\n";
  }
  return out.str();
}

}  // namespace khadeq
