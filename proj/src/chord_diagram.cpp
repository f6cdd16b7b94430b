#include "khadeq/chord_diagram.hpp"

#include <algorithm>
#include <map>

#include "khadeq/common.hpp"

namespace khadeq {

void validate(const ChordDiagram& d) {
  std::map<std::string, int> counts;
  for (const auto& label : d.word) counts[label]++;
  for (const auto& [label, c] : counts)
    if (c != 2)
      throw ParseError("chord label '" + label + "' occurs " +
                       std::to_string(c) + " times, expected 2");
  if (d.word.size() % 2 != 0)
    throw ParseError("double-occurrence word must have even length");
}

bool chords_interlace(int a1, int a2, int b1, int b2) {
  if (a1 > a2) std::swap(a1, a2);
  bool in1 = b1 > a1 && b1 < a2;
  bool in2 = b2 > a1 && b2 < a2;
  return in1 != in2;
}

Graph interlacement(const ChordDiagram& d) {
  validate(d);
  std::map<std::string, std::pair<int, int>> pos;
  for (size_t i = 0; i < d.word.size(); ++i) {
    auto it = pos.find(d.word[i]);
    if (it == pos.end())
      pos[d.word[i]] = {static_cast<int>(i), -1};
    else
      it->second.second = static_cast<int>(i);
  }
  std::vector<std::string> verts;
  for (const auto& [label, p] : pos) verts.push_back(label);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto it = pos.begin(); it != pos.end(); ++it)
    for (auto jt = std::next(it); jt != pos.end(); ++jt)
      if (chords_interlace(it->second.first, it->second.second,
                           jt->second.first, jt->second.second))
        edges.emplace_back(it->first, jt->first);
  return Graph(verts, edges);
}

std::vector<uint8_t> normal_form(const std::vector<uint8_t>& word) {
  std::vector<int> rename(256, -1);
  std::vector<uint8_t> out;
  out.reserve(word.size());
  int next = 0;
  for (uint8_t s : word) {
    if (rename[s] < 0) rename[s] = next++;
    out.push_back(static_cast<uint8_t>(rename[s]));
  }
  return out;
}

std::vector<uint8_t> canonical_form(const std::vector<uint8_t>& word) {
  const size_t len = word.size();
  if (len == 0) return {};
  std::vector<uint8_t> best;
  std::vector<uint8_t> rotated(len);
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t off = 0; off < len; ++off) {
      for (size_t i = 0; i < len; ++i) {
        size_t src = dir == 0 ? (off + i) % len : (off + len - i) % len;
        rotated[i] = word[src];
      }
      auto cand = normal_form(rotated);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

ChordDiagram canonical_diagram(const ChordDiagram& d) {
  validate(d);
  auto canon = canonical_form(word_symbols(d));
  ChordDiagram out;
  for (uint8_t s : canon) out.word.push_back(std::to_string(s));
  return out;
}

std::vector<uint8_t> word_symbols(const ChordDiagram& d) {
  std::map<std::string, int> seen;
  std::vector<uint8_t> out;
  int next = 0;
  for (const auto& label : d.word) {
    auto it = seen.find(label);
    if (it == seen.end()) {
      seen[label] = next;
      out.push_back(static_cast<uint8_t>(next++));
    } else {
      out.push_back(static_cast<uint8_t>(it->second));
    }
  }
  return out;
}

std::string symbols_to_string(const std::vector<uint8_t>& word) {
  std::vector<std::string> parts;
  for (uint8_t s : word) parts.push_back(std::to_string(s));
  return join_strings(parts, " ");
}

std::vector<uint8_t> symbols_from_string(const std::string& text) {
  std::vector<uint8_t> out;
  for (const auto& tok : split_ws(text)) {
    int v = std::stoi(tok);
    if (v < 0 || v > 255) throw ParseError("symbol out of range: " + tok);
    out.push_back(static_cast<uint8_t>(v));
  }
  return out;
}

}  // namespace khadeq
