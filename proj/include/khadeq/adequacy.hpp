#ifndef KHADEQ_ADEQUACY_HPP
#define KHADEQ_ADEQUACY_HPP

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "khadeq/braid.hpp"
#include "khadeq/homology.hpp"
#include "khadeq/resolution.hpp"

namespace khadeq {

// A diagram is A-adequate iff no chord of the all-A state has both endpoints
// on one circle, i.e. the Lando graph has no vertices.
bool is_A_adequate(const LinkDiagram& d);
// B-adequacy is A-adequacy of the mirror image.
bool is_B_adequate(const LinkDiagram& d);

// Khovanov homology in the extreme quantum grading j_min, indexed by
// homological grading i. Computed as reduced cohomology of the independence
// complex of the Lando graph: the group at grading i is H^{i-1+n} of that
// complex, n the negative crossing count.
std::map<int, AbelianGroup> extreme_khovanov(const LinkDiagram& d);
std::map<int, AbelianGroup> extreme_khovanov_state(int neg_crossings,
                                                   const StateResolution& res);

// Khovanov A-adequate: some extreme group is nonzero.
bool is_khovanov_A_adequate(const LinkDiagram& d);

struct AdequacyReport {
  std::string diagram;
  int p = 0, n = 0;
  int circles = 0;
  int j_min = 0;
  bool a_adequate = false;
  std::optional<bool> b_adequate;  // unknown for bare state fixtures
  Graph lando;
  bool lando_bipartite = false;
  std::map<int, AbelianGroup> extreme;
  bool khovanov_a_adequate = false;
  std::optional<std::vector<int>> wedge;  // sphere dimensions when torsion-free
};

AdequacyReport adequacy_report(const LinkDiagram& d, const std::string& name);
// Report from a stored Kauffman state (no mirror available, so no B flag).
AdequacyReport adequacy_report_state(const DiagramState& s,
                                     const std::string& name);

nlohmann::ordered_json report_to_json(const AdequacyReport& r);
std::string report_to_text(const AdequacyReport& r);

}  // namespace khadeq

#endif
