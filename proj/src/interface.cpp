#include "isq/interface.hpp"

#include <sstream>

#include "text_cursor.hpp"

namespace isq {

namespace {

using detail::Cursor;

MethodSet parse_method_token(Cursor& cur) {
  if (cur.peek() == 'M' || cur.peek() == 'A') {
    const std::string_view kw = cur.identifier();
    if (kw == "M16") return MethodSet::m16();
    if (kw == "A16") return MethodSet::index_methods();
    cur.fail("unknown method keyword '" + std::string(kw) + "'");
  }
  return MethodSet{detail::parse_method_at(cur)};
}

Focus parse_focus_token(Cursor& cur) {
  const std::size_t start = cur.pos();
  detail::RoleParts role = detail::parse_role_at(cur);
  cur.expect(':', "':' after role");
  const std::uint32_t index = cur.number();
  if (index == 0) throw ParseError("focus index must be positive", start);
  return Focus{role.kind, role.header, std::move(role.base), index};
}

void parse_line(std::string_view line, std::size_t offset, BasicActionInterface& out) {
  Cursor cur(line, offset);
  if (cur.at_end()) return;
  do {
    const Focus focus = parse_focus_token(cur);
    MethodSet methods;
    if (cur.accept('.')) {
      // inline form: focus.{m, m} or focus.M16
      if (cur.accept('{')) {
        if (!cur.accept('}')) {
          do {
            methods |= parse_method_token(cur);
          } while (cur.accept(','));
          cur.expect('}', "'}'");
        }
      } else {
        methods = parse_method_token(cur);
      }
    } else {
      cur.expect(':', "':' after focus");
      while (!cur.at_end() && cur.peek() != '+') methods |= parse_method_token(cur);
    }
    out.add(focus, methods);
  } while (cur.accept('+'));
  if (!cur.at_end()) cur.fail("unexpected trailing text");
}

}  // namespace

BasicActionInterface& BasicActionInterface::add(const Focus& focus, MethodSet methods) {
  entries_[focus] |= methods;
  return *this;
}

MethodSet BasicActionInterface::methods_of(const Focus& focus) const {
  const auto it = entries_.find(focus);
  return it == entries_.end() ? MethodSet{} : it->second;
}

bool BasicActionInterface::subinterface_of(const BasicActionInterface& other) const {
  for (const auto& [focus, methods] : entries_) {
    if (!methods.subset_of(other.methods_of(focus))) return false;
  }
  return true;
}

std::string BasicActionInterface::str() const {
  if (entries_.empty()) return "{}";
  std::string out;
  for (const auto& [focus, methods] : entries_) {
    if (!out.empty()) out += " + ";
    out += focus.str() + "." + methods.str();
  }
  return out;
}

BasicActionInterface BasicActionInterface::operator+(const BasicActionInterface& other) const {
  BasicActionInterface out = *this;
  for (const auto& [focus, methods] : other.entries_) out.add(focus, methods);
  return out;
}

BasicActionInterface parse_interface(std::string_view text) {
  BasicActionInterface out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    parse_line(line, start, out);
    start = end + 1;
  }
  return out;
}

std::string render_interface_file(const BasicActionInterface& iface) {
  std::ostringstream out;
  for (const auto& [focus, methods] : iface.entries()) {
    out << focus.str() << ':';
    for (const auto& m : methods.methods()) out << ' ' << m.str();
    out << '\n';
  }
  return out.str();
}

}  // namespace isq
