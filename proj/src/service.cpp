#include "isq/service.hpp"

#include <sstream>

#include "text_cursor.hpp"

namespace isq {

namespace {

MethodSet default_methods(KernelKind kind) {
  return kind == KernelKind::Register ? MethodSet::m16() : MethodSet::all();
}

using detail::Cursor;

bool parse_bit(Cursor& cur) {
  const char c = cur.peek();
  if (c != '0' && c != '1') cur.fail("expected 0 or 1");
  cur.accept(c);
  return c == '1';
}

Kernel parse_kernel(Cursor& cur) {
  const std::string_view kw = cur.identifier();
  Kernel k;
  cur.expect('(', "'('");
  if (kw == "br") {
    if (cur.accept('*')) {
      k = Kernel::inactive_of(KernelKind::Register);
    } else {
      k = Kernel::reg(parse_bit(cur));
    }
  } else if (kw == "arr") {
    if (cur.accept('*')) {
      k = Kernel::inactive_of(KernelKind::Array1D);
    } else {
      bool bits[3] = {false, false, false};
      constexpr std::string_view names[3] = {"i", "c0", "c1"};
      for (int f = 0; f < 3; ++f) {
        if (f != 0) cur.expect(',', "','");
        if (cur.identifier() != names[f]) cur.fail("expected arr(i=.,c0=.,c1=.)");
        cur.expect('=', "'='");
        bits[f] = parse_bit(cur);
      }
      k = Kernel::array(bits[0], bits[1], bits[2]);
    }
  } else {
    cur.fail("expected br(...) or arr(...)");
  }
  cur.expect(')', "')'");
  if (cur.accept('{')) {
    MethodSet ms;
    if (!cur.accept('}')) {
      do {
        ms.insert(detail::parse_method_at(cur));
      } while (cur.accept(','));
      cur.expect('}', "'}'");
    }
    k = restrict_methods(ms, k);
  }
  return k;
}

}  // namespace

Kernel Kernel::reg(bool content) {
  return Kernel{KernelKind::Register, false, static_cast<std::uint8_t>(content ? 1 : 0), MethodSet::m16()};
}

Kernel Kernel::array(bool index, bool cell0, bool cell1) {
  const auto s = static_cast<std::uint8_t>((index ? 1 : 0) | (cell0 ? 2 : 0) | (cell1 ? 4 : 0));
  return Kernel{KernelKind::Array1D, false, s, MethodSet::all()};
}

Kernel Kernel::inactive_of(KernelKind kind) { return Kernel{kind, true, 0, MethodSet{}}; }

std::string Kernel::str() const {
  std::string out;
  if (kind == KernelKind::Register) {
    out = inactive ? "br(*)" : std::string("br(") + (content() ? '1' : '0') + ")";
  } else if (inactive) {
    out = "arr(*)";
  } else {
    out = std::string("arr(i=") + (index_bit() ? '1' : '0') + ",c0=" + (cell(0) ? '1' : '0') +
          ",c1=" + (cell(1) ? '1' : '0') + ")";
  }
  if (!inactive && methods != default_methods(kind)) {
    std::string ms = methods.str();
    out += ms;
  }
  return out;
}

std::optional<ApplyResult> apply_method(const Kernel& kernel, Method m) {
  if (kernel.inactive || !kernel.methods.contains(m)) return std::nullopt;
  if (kernel.kind == KernelKind::Register && m.target == MethodTarget::IndexBit) return std::nullopt;
  ApplyResult r;
  r.next = kernel;
  r.next.state = apply_bits(kernel.kind, kernel.state, m, r.reply);
  return r;
}

Kernel restrict_methods(MethodSet j, const Kernel& kernel) {
  if (kernel.kind == KernelKind::Register) j = j & MethodSet::m16();
  if (j.empty() || kernel.inactive) return Kernel::inactive_of(kernel.kind);
  Kernel out = kernel;
  out.methods = j;
  return out;
}

ServiceFamily ServiceFamily::single(const Focus& focus, const Kernel& kernel) {
  ServiceFamily h;
  h.bindings_.emplace(focus, kernel);
  return h;
}

const Kernel* ServiceFamily::find(const Focus& focus) const {
  const auto it = bindings_.find(focus);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::string ServiceFamily::str() const {
  if (bindings_.empty()) return "{}";
  std::string out;
  for (const auto& [focus, kernel] : bindings_) {
    if (!out.empty()) out += " (+) ";
    out += focus.str() + "." + kernel.str();
  }
  return out;
}

ServiceFamily compose(const ServiceFamily& h, const ServiceFamily& k) {
  ServiceFamily out = h;
  for (const auto& [focus, kernel] : k.bindings()) {
    if (const Kernel* existing = out.find(focus)) {
      // Kinds may differ; the register form is the canonical inactive value then.
      const KernelKind kind = existing->kind == kernel.kind ? kernel.kind : KernelKind::Register;
      out.set(focus, Kernel::inactive_of(kind));
    } else {
      out.set(focus, kernel);
    }
  }
  return out;
}

ServiceFamily restrict(const std::set<Focus>& v, const ServiceFamily& h) {
  ServiceFamily out;
  for (const auto& [focus, kernel] : h.bindings()) {
    if (!v.contains(focus)) out.set(focus, kernel);
  }
  return out;
}

BasicActionInterface provided_interface(const ServiceFamily& h) {
  BasicActionInterface out;
  for (const auto& [focus, kernel] : h.bindings()) out.add(focus, kernel.methods);
  return out;
}

ServiceFamily parse_family(std::string_view text) {
  ServiceFamily out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, start);
    if (!cur.at_end()) {
      const std::size_t at = cur.pos();
      detail::RoleParts role = detail::parse_role_at(cur);
      cur.expect(':', "':' after role");
      const std::uint32_t index = cur.number();
      if (index == 0) throw ParseError("focus index must be positive", start + at);
      const Focus focus{role.kind, role.header, std::move(role.base), index};
      cur.expect('=', "'=' after focus");
      const Kernel kernel = parse_kernel(cur);
      if (focus.is_array() != (kernel.kind == KernelKind::Array1D)) {
        throw ParseError("kernel kind does not match focus " + focus.str(), start + at);
      }
      if (!cur.at_end()) cur.fail("unexpected trailing text");
      out = compose(out, ServiceFamily::single(focus, kernel));
    }
    start = end + 1;
  }
  return out;
}

std::string render_family_file(const ServiceFamily& h) {
  std::ostringstream out;
  for (const auto& [focus, kernel] : h.bindings()) out << focus.str() << '=' << kernel.str() << '\n';
  return out.str();
}

}  // namespace isq
