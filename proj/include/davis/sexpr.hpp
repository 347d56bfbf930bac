#pragma once

// Minimal reader for the parenthesized prefix syntax shared by the
// first-order and machine-file formats.

#include <string>
#include <string_view>
#include <vector>

namespace davis {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  bool is_list = false;

  bool is_atom() const { return !is_list; }
  std::string to_string() const;
};

// Parses exactly one expression; trailing non-blank text is an error.
// `line` is attached to any ParseError raised.
SExpr parse_sexpr(std::string_view text, int line = 0);

}  // namespace davis
