#ifndef KHADEQ_RESOLUTION_HPP
#define KHADEQ_RESOLUTION_HPP

#include <string>
#include <vector>

#include "khadeq/braid.hpp"
#include "khadeq/graph.hpp"

namespace khadeq {

// One endpoint of a smoothed-crossing chord: which state circle it lies on
// and its position in that circle's cyclic endpoint order.
struct ChordEnd {
  int circle = -1;
  int pos = -1;
};

struct ResolutionChord {
  std::string id;
  ChordEnd a, b;

  bool same_circle() const { return a.circle == b.circle; }
};

// Kauffman state: the circles of a full smoothing together with one chord
// per smoothed crossing recording where the crossing touched the circles.
struct StateResolution {
  std::vector<std::string> circle_ids;
  std::vector<ResolutionChord> chords;

  int num_circles() const { return static_cast<int>(circle_ids.size()); }
};

// All-A smoothing of a closed braid diagram. A positive crossing smooths to
// the identity tangle with a horizontal chord between the two columns; a
// negative crossing smooths to the cap-cup tangle with a vertical chord.
// Circles are traced deterministically: ids in order of first traversal,
// endpoint positions in traversal order.
StateResolution resolve_A(const LinkDiagram& d);

// Minimal potential quantum grading: p - 2n - |all-A state circles|.
int j_min(const LinkDiagram& d);

// Kauffman state with crossing counts, as stored in .chd files:
//   p=<int> n=<int>
//   circle <id>: <chord-label> <chord-label> ...
// Every chord label appears exactly twice in the file; token order is the
// cyclic endpoint order on each circle.
struct DiagramState {
  int p = 0, n = 0;
  StateResolution res;
};

DiagramState parse_chd(const std::string& text);
std::string chd_to_string(const DiagramState& s);

// Lando graph: one vertex per chord with both endpoints on one circle; edges
// between interlaced chords of the same circle (a disjoint union over
// circles of circle-wise interlacement graphs).
Graph lando_graph(const StateResolution& res);

}  // namespace khadeq

#endif
