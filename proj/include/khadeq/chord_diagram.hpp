#ifndef KHADEQ_CHORD_DIAGRAM_HPP
#define KHADEQ_CHORD_DIAGRAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "khadeq/graph.hpp"

namespace khadeq {

// A chord diagram given as a cyclic double-occurrence word: each chord label
// appears exactly twice; word order is the cyclic order of endpoints on the
// circle.
struct ChordDiagram {
  std::vector<std::string> word;
};

// Throws ParseError unless every label occurs exactly twice.
void validate(const ChordDiagram& d);

// Interlacement graph: chords are vertices, adjacent iff their endpoints
// alternate around the circle (a .. b .. a .. b).
Graph interlacement(const ChordDiagram& d);

// --- symbol-level words (used by enumeration and recognition) -------------
//
// A word over symbols 0..n-1, each appearing twice, is in normal form when
// symbols are numbered by first occurrence. canonical_form minimizes over
// all rotations and both reading directions, re-normalizing each candidate;
// two words are the same unlabeled diagram iff their canonical forms match.

std::vector<uint8_t> normal_form(const std::vector<uint8_t>& word);
std::vector<uint8_t> canonical_form(const std::vector<uint8_t>& word);

ChordDiagram canonical_diagram(const ChordDiagram& d);

// True iff chords (a1 a2) and (b1 b2) alternate; positions are distinct
// values on one cyclic order.
bool chords_interlace(int a1, int a2, int b1, int b2);

std::vector<uint8_t> word_symbols(const ChordDiagram& d);  // by first occurrence
std::string symbols_to_string(const std::vector<uint8_t>& word);
std::vector<uint8_t> symbols_from_string(const std::string& text);

}  // namespace khadeq

#endif
