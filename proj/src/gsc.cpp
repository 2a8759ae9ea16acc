#include "isq/gsc.hpp"

#include <bit>

#include "text_cursor.hpp"

namespace isq {

namespace {

using detail::Cursor;

struct TemplateParser {
  Cursor& cur;
  std::string var;        // empty outside a block
  std::int64_t shift = 0;  // first - 1

  bool at_var() {
    if (var.empty()) return false;
    const char c = cur.peek();
    return c == var.front();
  }

  void read_var() {
    const std::string_view ident = cur.identifier();
    if (ident != var) cur.fail("unknown variable '" + std::string(ident) + "'");
  }

  // term := NUM ['*'] [VAR] | VAR
  Affine term() {
    if (at_var()) {
      read_var();
      return Affine{1, 0};
    }
    const std::int64_t value = cur.number();
    cur.accept('*');
    if (at_var()) {
      read_var();
      return Affine{value, 0};
    }
    return Affine{0, value};
  }

  Affine expr() {
    const bool paren = cur.accept('(');
    Affine total = term();
    for (;;) {
      if (cur.accept('+')) {
        const Affine t = term();
        total.coef += t.coef;
        total.offset += t.offset;
      } else if (cur.peek() == '-') {
        cur.accept('-');
        const Affine t = term();
        total.coef -= t.coef;
        total.offset -= t.offset;
      } else {
        break;
      }
    }
    if (paren) cur.expect(')', "')'");
    // Rebase from the written range A..B onto 1..count.
    total.offset += total.coef * shift;
    return total;
  }

  TemplateInstruction instruction() {
    const std::size_t start = cur.pos();
    const char c = cur.peek();
    if (c == '\0' || c == ';' || c == '}') throw ParseError("empty instruction", start);
    TemplateInstruction t;
    if (cur.accept('!')) return TemplateInstruction::constant(Instruction::term());
    if (cur.accept('#')) {
      t.shape = Instruction::fwd(0);
      t.jump = expr();
      return t;
    }
    if (cur.accept('\\')) {
      cur.expect('#', "'#' after '\\'");
      t.shape = Instruction::bwd(0);
      t.jump = expr();
      return t;
    }
    Polarity pol = Polarity::Plain;
    if (cur.accept('+')) {
      pol = Polarity::Pos;
    } else if (cur.accept('-')) {
      pol = Polarity::Neg;
    }
    detail::RoleParts role = detail::parse_role_at(cur);
    cur.expect(':', "':' after role");
    t.index = expr();
    cur.expect('.', "'.' between focus and method");
    const Method method = detail::parse_method_at(cur);
    Focus focus{role.kind, role.header, std::move(role.base), 1};
    if (method.target == MethodTarget::IndexBit && !focus.is_array()) {
      throw ParseError("index-bit method on scalar focus", start);
    }
    t.shape = Instruction::basic(pol, std::move(focus), method);
    return t;
  }

  std::vector<TemplateInstruction> body(char terminator) {
    std::vector<TemplateInstruction> out;
    do {
      out.push_back(instruction());
    } while (cur.accept(';') && cur.peek() != terminator);
    return out;
  }
};

}  // namespace

std::string Affine::str(std::string_view var) const {
  if (coef == 0) return std::to_string(offset);
  std::string out = coef == 1 ? std::string(var) : std::to_string(coef) + std::string(var);
  if (offset > 0) out += "+" + std::to_string(offset);
  if (offset < 0) out += "-" + std::to_string(-offset);
  if (offset != 0 || coef != 1) out = "(" + out + ")";
  return out;
}

TemplateInstruction TemplateInstruction::constant(const Instruction& in) {
  TemplateInstruction t;
  t.shape = in;
  t.index = Affine{0, in.is_basic() ? static_cast<std::int64_t>(in.focus.index) : 1};
  t.jump = Affine{0, static_cast<std::int64_t>(in.jump)};
  if (in.is_basic()) t.shape.focus.index = 1;
  t.shape.jump = 0;
  return t;
}

Instruction TemplateInstruction::instantiate(std::int64_t k) const {
  Instruction in = shape;
  if (in.is_jump()) {
    const std::int64_t j = jump.eval(k);
    if (j < 0) throw std::invalid_argument("negative jump counter at k=" + std::to_string(k));
    in.jump = static_cast<std::uint32_t>(j);
  } else if (in.is_basic()) {
    const std::int64_t idx = index.eval(k);
    if (idx < 1) throw std::invalid_argument("non-positive focus index at k=" + std::to_string(k));
    in.focus.index = static_cast<std::uint32_t>(idx);
  }
  return in;
}

std::string TemplateInstruction::str(std::string_view var) const {
  switch (shape.kind) {
    case InstrKind::Term: return "!";
    case InstrKind::FwdJump: return "#" + jump.str(var);
    case InstrKind::BwdJump: return "\\#" + jump.str(var);
    case InstrKind::Basic: break;
  }
  std::string out;
  if (shape.polarity == Polarity::Pos) out += '+';
  if (shape.polarity == Polarity::Neg) out += '-';
  return out + role_text(shape.focus.kind, shape.focus.header) + shape.focus.base + ":" +
         index.str(var) + "." + shape.method.str();
}

GscSequence::GscSequence(std::vector<GscSegment> segments) : segments_(std::move(segments)) {
  for (const auto& seg : segments_) {
    if (const auto* r = std::get_if<Repeat>(&seg); r != nullptr && r->count == 0) {
      throw std::invalid_argument("repeat count must be positive");
    }
  }
}

GscSequence& GscSequence::plain(std::vector<Instruction> instrs) {
  if (!instrs.empty()) segments_.emplace_back(std::move(instrs));
  return *this;
}

GscSequence& GscSequence::plain(std::string_view program) {
  return plain(parse(program).instrs());
}

GscSequence& GscSequence::repeat(Repeat r) {
  if (r.count == 0) throw std::invalid_argument("repeat count must be positive");
  segments_.emplace_back(std::move(r));
  return *this;
}

std::string GscSequence::str() const {
  std::string out;
  for (const auto& seg : segments_) {
    if (!out.empty()) out += ";";
    if (const auto* p = std::get_if<std::vector<Instruction>>(&seg)) {
      for (std::size_t i = 0; i < p->size(); ++i) {
        if (i != 0) out += ';';
        out += (*p)[i].str();
      }
    } else {
      const auto& r = std::get<Repeat>(seg);
      out += "rep " + r.var + "=1.." + std::to_string(r.count) + " { ";
      for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i != 0) out += ";";
        out += r.body[i].str(r.var);
      }
      out += " }";
    }
  }
  return out;
}

Repeat make_repeat(std::uint32_t count, std::string var, std::string_view body, std::int64_t first) {
  Cursor cur(body);
  TemplateParser p{cur, var, first - 1};
  Repeat r;
  r.count = count;
  r.var = std::move(var);
  r.body = p.body('\0');
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return r;
}

GscSequence parse_gsc(std::string_view text) {
  Cursor cur(text);
  GscSequence g;
  std::vector<Instruction> pending;
  if (cur.at_end()) throw ParseError("empty program", 0);
  do {
    if (cur.peek() == 'r') {
      const std::size_t save = cur.pos();
      const std::string_view kw = cur.identifier();
      if (kw != "rep") throw ParseError("expected 'rep' or an instruction", save);
      const std::string var(cur.identifier());
      cur.expect('=', "'=' in rep header");
      const std::int64_t first = cur.number();
      cur.expect('.', "'..' in rep header");
      cur.expect('.', "'..' in rep header");
      const std::int64_t last = cur.number();
      if (last < first) throw ParseError("empty repeat range", save);
      cur.expect('{', "'{'");
      TemplateParser p{cur, var, first - 1};
      Repeat r;
      r.count = static_cast<std::uint32_t>(last - first + 1);
      r.var = var;
      r.body = p.body('}');
      cur.expect('}', "'}'");
      g.plain(std::move(pending));
      pending.clear();
      g.repeat(std::move(r));
    } else {
      TemplateParser p{cur, {}, 0};
      pending.push_back(p.instruction().instantiate(1));
    }
  } while (cur.accept(';'));
  if (!cur.at_end()) cur.fail("expected ';'");
  g.plain(std::move(pending));
  return g;
}

InstructionSequence expand_gsc(const GscSequence& g, Dialect dialect) {
  std::vector<Instruction> out;
  for (const auto& seg : g.segments()) {
    if (const auto* p = std::get_if<std::vector<Instruction>>(&seg)) {
      out.insert(out.end(), p->begin(), p->end());
    } else {
      const auto& r = std::get<Repeat>(seg);
      for (std::uint32_t k = 1; k <= r.count; ++k) {
        for (const auto& t : r.body) out.push_back(t.instantiate(k));
      }
    }
  }
  bool backward = false;
  for (const auto& in : out) backward = backward || in.kind == InstrKind::BwdJump;
  return InstructionSequence(std::move(out), backward ? Dialect::PGLB : dialect);
}

std::size_t lloc_gsc(const GscSequence& g) {
  std::size_t total = 0;
  for (const auto& seg : g.segments()) {
    if (const auto* p = std::get_if<std::vector<Instruction>>(&seg)) {
      total += p->size();
    } else {
      const auto& r = std::get<Repeat>(seg);
      total += r.body.size() + 2 + static_cast<std::size_t>(std::bit_width(r.count) - 1);
    }
  }
  return total;
}

}  // namespace isq
