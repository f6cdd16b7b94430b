#include "khadeq/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "khadeq/chord_diagram.hpp"
#include "khadeq/common.hpp"

namespace khadeq {

namespace {

std::string chord_id(int index, int count) {
  int width = 1;
  for (int v = count - 1; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index);
  return "c" + std::string(static_cast<size_t>(width) - digits.size(), '0') +
         digits;
}

}  // namespace

StateResolution resolve_A(const LinkDiagram& d) {
  const int s = d.strands;
  const int m = static_cast<int>(d.crossings.size());
  StateResolution out;
  if (m == 0) {
    for (int c = 0; c < s; ++c) out.circle_ids.push_back(std::to_string(c));
    return out;
  }

  // Ports: ((row*s + col)*2 + side), side 0 = above the tangle row, 1 = below.
  // Every port has exactly one in-row edge and one between-row edge, so the
  // smoothed diagram is a disjoint union of cycles; walk them alternating the
  // two edge kinds.
  const int nports = m * s * 2;
  auto port = [&](int r, int c, int side) { return (r * s + c) * 2 + side; };
  std::vector<int> intra(nports, -1);
  std::vector<int> intra_chord(nports, -1);
  for (int r = 0; r < m; ++r) {
    const int pi = d.crossings[static_cast<size_t>(r)].position - 1;
    const int sign = d.crossings[static_cast<size_t>(r)].sign;
    for (int c = 0; c < s; ++c) {
      if (sign < 0 && (c == pi || c == pi + 1)) continue;
      intra[port(r, c, 0)] = port(r, c, 1);
      intra[port(r, c, 1)] = port(r, c, 0);
      if (sign > 0 && (c == pi || c == pi + 1)) {
        intra_chord[port(r, c, 0)] = r;  // chord endpoint on this strand
        intra_chord[port(r, c, 1)] = r;
      }
    }
    if (sign < 0) {
      // cap-cup: the two columns join above and below, chord between the arcs
      intra[port(r, pi, 0)] = port(r, pi + 1, 0);
      intra[port(r, pi + 1, 0)] = port(r, pi, 0);
      intra[port(r, pi, 1)] = port(r, pi + 1, 1);
      intra[port(r, pi + 1, 1)] = port(r, pi, 1);
      intra_chord[port(r, pi, 0)] = r;
      intra_chord[port(r, pi + 1, 0)] = r;
      intra_chord[port(r, pi, 1)] = r;
      intra_chord[port(r, pi + 1, 1)] = r;
    }
  }
  auto inter = [&](int pt) {
    int side = pt & 1;
    int rc = pt >> 1;
    int r = rc / s, c = rc % s;
    return side == 1 ? port((r + 1) % m, c, 0) : port((r + m - 1) % m, c, 1);
  };

  std::vector<ChordEnd> first_end(static_cast<size_t>(m));
  std::vector<ChordEnd> second_end(static_cast<size_t>(m));
  std::vector<bool> visited(static_cast<size_t>(nports), false);
  for (int start = 0; start < nports; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    int circle = out.num_circles();
    out.circle_ids.push_back(std::to_string(circle));
    int pos = 0;
    int cur = start;
    bool via_intra = true;
    do {
      visited[static_cast<size_t>(cur)] = true;
      if (via_intra) {
        int chord = intra_chord[static_cast<size_t>(cur)];
        if (chord >= 0) {
          ChordEnd e{circle, pos++};
          if (first_end[static_cast<size_t>(chord)].circle < 0)
            first_end[static_cast<size_t>(chord)] = e;
          else
            second_end[static_cast<size_t>(chord)] = e;
        }
        cur = intra[static_cast<size_t>(cur)];
      } else {
        cur = inter(cur);
      }
      visited[static_cast<size_t>(cur)] = true;
      via_intra = !via_intra;
    } while (!(cur == start && via_intra));
  }

  for (int r = 0; r < m; ++r) {
    ResolutionChord chord;
    chord.id = chord_id(r, m);
    chord.a = first_end[static_cast<size_t>(r)];
    chord.b = second_end[static_cast<size_t>(r)];
    out.chords.push_back(std::move(chord));
  }
  return out;
}

int j_min(const LinkDiagram& d) {
  return d.p() - 2 * d.n() - resolve_A(d).num_circles();
}

DiagramState parse_chd(const std::string& text) {
  std::istringstream iss(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  DiagramState state;
  std::map<std::string, std::vector<ChordEnd>> ends;
  std::vector<std::string> order;  // labels in appearance order
  while (std::getline(iss, line)) {
    ++lineno;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0].rfind("p=", 0) != 0 ||
          toks[1].rfind("n=", 0) != 0)
        throw ParseError("expected header 'p=<int> n=<int>'", lineno, 1);
      try {
        state.p = std::stoi(toks[0].substr(2));
        state.n = std::stoi(toks[1].substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad crossing counts in header", lineno, 1);
      }
      if (state.p < 0 || state.n < 0)
        throw ParseError("crossing counts must be nonnegative", lineno, 1);
      have_header = true;
      continue;
    }
    if (toks[0] != "circle")
      throw ParseError("expected 'circle <id>: ...'", lineno, 1);
    size_t body = 2;
    std::string id = toks.size() > 1 ? toks[1] : "";
    if (!id.empty() && id.back() == ':') {
      id.pop_back();
    } else if (toks.size() > 2 && toks[2] == ":") {
      body = 3;
    } else {
      throw ParseError("missing ':' after circle id", lineno, 1);
    }
    if (id.empty()) throw ParseError("empty circle id", lineno, 1);
    int circle = state.res.num_circles();
    state.res.circle_ids.push_back(id);
    int pos = 0;
    for (size_t i = body; i < toks.size(); ++i) {
      if (ends.find(toks[i]) == ends.end()) order.push_back(toks[i]);
      ends[toks[i]].push_back({circle, pos++});
    }
  }
  if (!have_header) throw ParseError("missing 'p= n=' header");
  if (state.res.circle_ids.empty()) throw ParseError("no circles in state file");
  for (const auto& label : order) {
    const auto& e = ends[label];
    if (e.size() != 2)
      throw ParseError("chord label '" + label + "' occurs " +
                       std::to_string(e.size()) + " times, expected 2");
    state.res.chords.push_back({label, e[0], e[1]});
  }
  if (static_cast<int>(order.size()) != state.p + state.n)
    throw ParseError("chord count " + std::to_string(order.size()) +
                     " does not match p+n=" + std::to_string(state.p + state.n));
  return state;
}

std::string chd_to_string(const DiagramState& s) {
  std::ostringstream out;
  out << "p=" << s.p << " n=" << s.n << "\n";
  // rebuild per-circle token sequences
  for (int c = 0; c < s.res.num_circles(); ++c) {
    std::vector<std::pair<int, std::string>> toks;
    for (const auto& chord : s.res.chords) {
      if (chord.a.circle == c) toks.emplace_back(chord.a.pos, chord.id);
      if (chord.b.circle == c) toks.emplace_back(chord.b.pos, chord.id);
    }
    std::sort(toks.begin(), toks.end());
    out << "circle " << s.res.circle_ids[static_cast<size_t>(c)] << ":";
    for (const auto& [pos, id] : toks) out << ' ' << id;
    out << "\n";
  }
  return out.str();
}

Graph lando_graph(const StateResolution& res) {
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<int, std::vector<const ResolutionChord*>> by_circle;
  for (const auto& chord : res.chords)
    if (chord.same_circle()) {
      verts.push_back(chord.id);
      by_circle[chord.a.circle].push_back(&chord);
    }
  for (const auto& [circle, chords] : by_circle)
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j)
        if (chords_interlace(chords[i]->a.pos, chords[i]->b.pos,
                             chords[j]->a.pos, chords[j]->b.pos))
          edges.emplace_back(chords[i]->id, chords[j]->id);
  return Graph(verts, edges);
}

}  // namespace khadeq
