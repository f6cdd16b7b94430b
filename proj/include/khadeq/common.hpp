#ifndef KHADEQ_COMMON_HPP
#define KHADEQ_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace khadeq {

// Parse failure carrying 1-based source coordinates.
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) +
                           ", column " + std::to_string(col_)),
        line(line_),
        col(col_) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checked 64-bit arithmetic left the representable range. Raised instead of
// wrapping silently.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_ws(const std::string& s);
std::string join_strings(const std::vector<std::string>& parts,
                         const std::string& sep);

// Drops a trailing '#'-comment, if any.
std::string strip_comment(const std::string& line);

uint64_t fnv1a64(const std::string& data);
std::string hex64(uint64_t v);

}  // namespace khadeq

#endif
