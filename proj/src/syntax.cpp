#include "isq/syntax.hpp"

#include "text_cursor.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <sstream>

namespace isq {

namespace {

struct RoleName {
  FocusKind kind;
  RoleHeader header;
  std::string_view text;
};

constexpr std::array<RoleName, 14> kRoleNames{{
    {FocusKind::Scalar, RoleHeader::In, "in"},
    {FocusKind::Scalar, RoleHeader::InOut, "inout"},
    {FocusKind::Scalar, RoleHeader::Out, "out"},
    {FocusKind::Scalar, RoleHeader::Out0, "out0"},
    {FocusKind::Scalar, RoleHeader::Out1, "out1"},
    {FocusKind::Scalar, RoleHeader::Aux0, "aux0"},
    {FocusKind::Scalar, RoleHeader::Aux1, "aux1"},
    {FocusKind::Array1D, RoleHeader::In, "in1D"},
    {FocusKind::Array1D, RoleHeader::InOut, "inout1D"},
    {FocusKind::Array1D, RoleHeader::Out, "out1D"},
    {FocusKind::Array1D, RoleHeader::Out0, "out1D0"},
    {FocusKind::Array1D, RoleHeader::Out1, "out1D1"},
    {FocusKind::Array1D, RoleHeader::Aux0, "aux1D0"},
    {FocusKind::Array1D, RoleHeader::Aux1, "aux1D1"},
}};

using detail::Cursor;
using detail::kCodeChars;
using detail::parse_method_at;

Focus parse_focus_at(Cursor& cur) {
  const std::size_t start = cur.pos();
  detail::RoleParts role = detail::parse_role_at(cur);
  cur.expect(':', "':' after role");
  const std::uint32_t index = cur.number();
  if (index == 0) throw ParseError("focus index must be positive", start);
  return Focus{role.kind, role.header, std::move(role.base), index};
}

Instruction parse_instruction_at(Cursor& cur) {
  const std::size_t start = cur.pos();
  const char c = cur.peek();
  if (c == '\0' || c == ';') throw ParseError("empty instruction", start);
  if (cur.accept('!')) return Instruction::term();
  if (cur.accept('#')) return Instruction::fwd(cur.number());
  if (cur.accept('\\')) {
    cur.expect('#', "'#' after '\\'");
    return Instruction::bwd(cur.number());
  }
  Polarity pol = Polarity::Plain;
  if (cur.accept('+')) {
    pol = Polarity::Pos;
  } else if (cur.accept('-')) {
    pol = Polarity::Neg;
  }
  Focus focus = parse_focus_at(cur);
  cur.expect('.', "'.' between focus and method");
  const Method method = parse_method_at(cur);
  if (method.target == MethodTarget::IndexBit && !focus.is_array()) {
    throw ParseError("index-bit method on scalar focus " + focus.str(), start);
  }
  return Instruction::basic(pol, std::move(focus), method);
}

template <typename F>
auto parse_whole(std::string_view text, F&& f) {
  Cursor cur(text);
  auto result = f(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return result;
}

bool has_backward_jump(const std::vector<Instruction>& instrs) {
  for (const auto& in : instrs) {
    if (in.kind == InstrKind::BwdJump) return true;
  }
  return false;
}

}  // namespace

namespace detail {

RoleParts parse_role_at(Cursor& cur) {
  const std::size_t start = cur.pos();
  const std::string_view ident = cur.identifier();
  const std::size_t underscore = ident.find('_');
  const std::string_view head = ident.substr(0, underscore);
  std::string base;
  if (underscore != std::string_view::npos) {
    base = std::string(ident.substr(underscore));
    if (base.size() < 2) throw ParseError("empty role base", start);
  }
  for (const auto& role : kRoleNames) {
    if (role.text == head) return RoleParts{role.kind, role.header, std::move(base)};
  }
  throw ParseError("unknown role header '" + std::string(head) + "'", start);
}

Method parse_method_at(Cursor& cur) {
  Method m;
  if (cur.peek() == 'a') {
    const std::string_view ident = cur.identifier();
    if (ident != "a1") cur.fail("expected 'a1:' or a method code");
    cur.expect(':', "':' after a1");
    m.target = MethodTarget::IndexBit;
  }
  m.yield = parse_code(cur);
  cur.expect('/', "'/' in method");
  m.effect = parse_code(cur);
  return m;
}

}  // namespace detail

std::string role_text(FocusKind kind, RoleHeader header) {
  for (const auto& role : kRoleNames) {
    if (role.kind == kind && role.header == header) return std::string(role.text);
  }
  return "?";
}

Focus Focus::scalar(RoleHeader header, std::uint32_t index, std::string base) {
  if (index == 0) throw std::invalid_argument("focus index must be positive");
  return Focus{FocusKind::Scalar, header, std::move(base), index};
}

Focus Focus::array(RoleHeader header, std::uint32_t index, std::string base) {
  if (index == 0) throw std::invalid_argument("focus index must be positive");
  return Focus{FocusKind::Array1D, header, std::move(base), index};
}

std::string Focus::str() const {
  return role_text(kind, header) + base + ":" + std::to_string(index);
}

std::string Method::str() const {
  std::string out = target == MethodTarget::IndexBit ? "a1:" : "";
  out += kCodeChars[static_cast<std::size_t>(yield)];
  out += '/';
  out += kCodeChars[static_cast<std::size_t>(effect)];
  return out;
}

std::vector<Method> MethodSet::methods() const {
  std::vector<Method> out;
  for (unsigned id = 0; id < 32; ++id) {
    if ((bits_ >> id) & 1U) out.push_back(Method::from_id(id));
  }
  return out;
}

std::string MethodSet::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& m : methods()) {
    if (!first) out += ',';
    out += m.str();
    first = false;
  }
  return out + "}";
}

std::string Instruction::str() const {
  switch (kind) {
    case InstrKind::Term: return "!";
    case InstrKind::FwdJump: return "#" + std::to_string(jump);
    case InstrKind::BwdJump: return "\\#" + std::to_string(jump);
    case InstrKind::Basic: break;
  }
  std::string out;
  if (polarity == Polarity::Pos) out += '+';
  if (polarity == Polarity::Neg) out += '-';
  return out + focus.str() + "." + method.str();
}

InstructionSequence::InstructionSequence(std::vector<Instruction> instrs, Dialect dialect)
    : instrs_(std::move(instrs)), dialect_(dialect) {
  if (instrs_.empty()) throw std::invalid_argument("instruction sequence must be non-empty");
  if (dialect_ == Dialect::SinglePass && has_backward_jump(instrs_)) {
    throw std::invalid_argument("backward jump in single-pass sequence");
  }
  for (const auto& in : instrs_) {
    if (in.is_basic()) {
      if (in.focus.index == 0) throw std::invalid_argument("focus index must be positive");
      if (in.method.target == MethodTarget::IndexBit && !in.focus.is_array()) {
        throw std::invalid_argument("index-bit method on scalar focus " + in.focus.str());
      }
    }
  }
}

InstructionSequence::InstructionSequence(std::vector<Instruction> instrs)
    : InstructionSequence(instrs, has_backward_jump(instrs) ? Dialect::PGLB : Dialect::SinglePass) {}

std::string InstructionSequence::str() const { return render(*this); }

InstructionSequence concat(const InstructionSequence& x, const InstructionSequence& y) {
  std::vector<Instruction> all = x.instrs();
  all.insert(all.end(), y.instrs().begin(), y.instrs().end());
  const Dialect d = (x.dialect() == Dialect::PGLB || y.dialect() == Dialect::PGLB)
                        ? Dialect::PGLB
                        : Dialect::SinglePass;
  return InstructionSequence(std::move(all), d);
}

Focus parse_focus(std::string_view text) {
  return parse_whole(text, [](Cursor& c) { return parse_focus_at(c); });
}

Method parse_method(std::string_view text) {
  return parse_whole(text, [](Cursor& c) { return parse_method_at(c); });
}

Instruction parse_instruction(std::string_view text) {
  return parse_whole(text, [](Cursor& c) { return parse_instruction_at(c); });
}

InstructionSequence parse(std::string_view text, Dialect dialect) {
  Cursor cur(text);
  if (cur.at_end()) throw ParseError("empty program", 0);
  std::vector<Instruction> instrs;
  do {
    const std::size_t start = cur.pos();
    Instruction in = parse_instruction_at(cur);
    if (in.kind == InstrKind::BwdJump && dialect == Dialect::SinglePass) {
      throw ParseError("backward jump in single-pass program", start);
    }
    instrs.push_back(std::move(in));
  } while (cur.accept(';'));
  if (!cur.at_end()) cur.fail("expected ';'");
  return InstructionSequence(std::move(instrs), dialect);
}

std::string render(const InstructionSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.instrs().size(); ++i) {
    if (i != 0) out += ';';
    out += seq.instrs()[i].str();
  }
  return out;
}

std::string strip_comments(std::string_view text) {
  std::ostringstream out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    out << text[i++];
  }
  return out.str();
}

}  // namespace isq
