#include "khadeq/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "khadeq/common.hpp"

namespace khadeq {

int LinkDiagram::p() const {
  int count = 0;
  for (const auto& c : crossings) count += c.sign > 0;
  return count;
}

int LinkDiagram::n() const {
  int count = 0;
  for (const auto& c : crossings) count += c.sign < 0;
  return count;
}

namespace {

struct Token {
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::istringstream iss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(iss, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i >= body.size()) break;
      size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      out.push_back({body.substr(start, i - start), lineno,
                     static_cast<int>(start) + 1});
    }
  }
  return out;
}

int parse_int(const Token& t, const char* what) {
  const char* s = t.text.c_str();
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0')
    throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                     t.line, t.col);
  return static_cast<int>(v);
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
  auto toks = tokenize(text);
  if (toks.empty()) throw ParseError("empty braid word file: missing strand count");
  BraidWord w;
  w.strands = parse_int(toks[0], "strand count");
  if (w.strands < 1)
    throw ParseError("strand count must be at least 1", toks[0].line, toks[0].col);
  for (size_t i = 1; i < toks.size(); ++i) {
    int letter = parse_int(toks[i], "braid letter");
    if (letter == 0)
      throw ParseError("braid letter must be nonzero", toks[i].line, toks[i].col);
    int idx = letter > 0 ? letter : -letter;
    if (idx >= w.strands)
      throw ParseError("generator " + std::to_string(idx) + " out of range for " +
                           std::to_string(w.strands) + " strands",
                       toks[i].line, toks[i].col);
    w.letters.push_back(letter);
  }
  return w;
}

std::string braid_to_string(const BraidWord& w) {
  std::ostringstream out;
  out << w.strands << "\n";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << w.letters[i];
  }
  if (!w.letters.empty()) out << "\n";
  return out.str();
}

LinkDiagram closure(const BraidWord& w) {
  LinkDiagram d;
  d.strands = w.strands;
  for (int letter : w.letters) {
    Crossing c;
    c.position = letter > 0 ? letter : -letter;
    c.sign = letter > 0 ? 1 : -1;
    d.crossings.push_back(c);
  }
  return d;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& c : out.crossings) c.sign = -c.sign;
  return out;
}

}  // namespace khadeq
