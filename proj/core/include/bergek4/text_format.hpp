#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Malformed triple-system text; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the "n m" header followed by m lines "a b c" with a < b < c < n.
TripleSystem parse(std::string_view text);

/// Inverse of parse(); triples in lexicographic order, newline-terminated.
std::string serialize(const TripleSystem& h);

}  // namespace bergek4
