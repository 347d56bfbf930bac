#include "davis/sexpr.hpp"

#include <cctype>

#include "davis/error.hpp"

namespace davis {

std::string SExpr::to_string() const {
  if (is_atom()) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].to_string();
  }
  return out + ")";
}

namespace {

class Reader {
 public:
  Reader(std::string_view text, int line) : text_(text), line_(line) {}

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == ')') fail("unexpected ')'");
    if (c == '(') {
      ++pos_;
      SExpr list;
      list.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    SExpr atom;
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("trailing text after expression");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1), line_);
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

SExpr parse_sexpr(std::string_view text, int line) {
  Reader r(text, line);
  SExpr e = r.read();
  r.expect_end();
  return e;
}

}  // namespace davis
