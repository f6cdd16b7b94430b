#ifndef KHADEQ_BRAID_HPP
#define KHADEQ_BRAID_HPP

#include <string>
#include <vector>

namespace khadeq {

// Braid word on `strands` strands; letters are nonzero integers, letter k
// meaning the positive generator at positions (k, k+1) and -k its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// A crossing of a closed-braid diagram: the strand position of the generator
// (1-based, left of the two columns involved) and the crossing sign.
struct Crossing {
  int position = 0;
  int sign = 0;
};

// Closed braid diagram. Crossing order follows the braid word top to bottom;
// the level of a crossing is its index in the list.
struct LinkDiagram {
  int strands = 1;
  std::vector<Crossing> crossings;

  int p() const;  // positive crossing count
  int n() const;  // negative crossing count
};

// Grammar: first line is the strand count, remaining tokens are the letters;
// '#' starts a comment. Letters must satisfy 1 <= |letter| < strands.
BraidWord parse_braid(const std::string& text);
std::string braid_to_string(const BraidWord& w);  // .brd content

LinkDiagram closure(const BraidWord& w);
LinkDiagram mirror(const LinkDiagram& d);  // flips every crossing sign

}  // namespace khadeq

#endif
