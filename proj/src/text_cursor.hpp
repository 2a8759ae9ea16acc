// Private text cursor shared by the program, template and file parsers.
#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "isq/syntax.hpp"

namespace isq::detail {

inline constexpr char kCodeChars[4] = {'0', '1', 'i', 'c'};

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::uint32_t number() {
    skip_ws();
    if (pos_ >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
      fail("expected number");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("number too large");
      ++pos_;
    }
    return static_cast<std::uint32_t>(value);
  }
  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected focus name");
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }
  [[nodiscard]] std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline Code parse_code(Cursor& cur) {
  const char c = cur.peek();
  for (std::size_t i = 0; i < 4; ++i) {
    if (kCodeChars[i] == c) {
      cur.accept(c);
      return static_cast<Code>(i);
    }
  }
  cur.fail("expected method code 0, 1, i or c");
}


struct RoleParts {
  FocusKind kind;
  RoleHeader header;
  std::string base;
};

/// Parses `HEADER[BASE]` up to (not including) the ':'.
RoleParts parse_role_at(Cursor& cur);
Method parse_method_at(Cursor& cur);

}  // namespace isq::detail
