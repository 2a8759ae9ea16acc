#include "isq/function.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "isq/metrics.hpp"
#include "machine.hpp"
#include "text_cursor.hpp"

namespace isq {

namespace {

int width(const Focus& f) { return f.is_array() ? 2 : 1; }

bool is_input_role(RoleHeader h) { return h == RoleHeader::In || h == RoleHeader::InOut; }
bool is_output_role(RoleHeader h) {
  return h == RoleHeader::Out || h == RoleHeader::Out0 || h == RoleHeader::Out1 || h == RoleHeader::InOut;
}
// Unread out0/out1 registers start from a known value, so they can serve as scratch.
bool is_aux_role(RoleHeader h) {
  return h == RoleHeader::Aux0 || h == RoleHeader::Aux1 || h == RoleHeader::Out0 || h == RoleHeader::Out1;
}

std::uint8_t pack(const Focus& f, Bits bits) {
  // bits: one value bit, or cell0 | cell1 << 1 for arrays (index bit starts at 0)
  if (!f.is_array()) return static_cast<std::uint8_t>(bits & 1U);
  return static_cast<std::uint8_t>((bits & 3U) << 1);
}

Bits unpack(const Focus& f, std::uint8_t state) {
  if (!f.is_array()) return state & 1U;
  return (state >> 1) & 3U;
}

Bits role_constant(const Focus& f) {
  const bool one = f.header == RoleHeader::Out1 || f.header == RoleHeader::Aux1;
  if (!one) return 0;
  return f.is_array() ? 3 : 1;
}

/// Compiled program plus the mapping from its foci to layout positions.
class LayoutRunner {
 public:
  LayoutRunner(const InstructionSequence& seq, const RegisterLayout& layout) : layout_(layout) {
    layout.validate();
    compiled_ = detail::compile(seq);
    foci_ = layout.foci();
    for (const auto& f : foci_) kernel_kind_.push_back(f.is_array() ? KernelKind::Array1D : KernelKind::Register);
    slot_to_layout_.assign(compiled_.foci.size(), -1);
    slots_.resize(compiled_.foci.size());
    for (std::size_t s = 0; s < compiled_.foci.size(); ++s) {
      const auto it = std::find(foci_.begin(), foci_.end(), compiled_.foci[s]);
      if (it == foci_.end()) continue;
      const auto li = static_cast<std::size_t>(it - foci_.begin());
      slot_to_layout_[s] = static_cast<int>(li);
      const KernelKind kind = kernel_kind_[li];
      slots_[s] = detail::SlotInfo{true, kind, false,
                                   kind == KernelKind::Register ? MethodSet::m16() : MethodSet::all()};
    }
    for (const auto& f : layout.outputs) {
      output_index_.push_back(static_cast<int>(std::find(foci_.begin(), foci_.end(), f) - foci_.begin()));
    }
    loops_ = seq.dialect() == Dialect::PGLB;
  }

  [[nodiscard]] std::vector<std::uint8_t> initial_states(Bits input, Bits arbitrary) const {
    std::vector<std::uint8_t> init(foci_.size(), 0);
    int in_off = 0;
    for (const auto& f : layout_.inputs) {
      const auto i = index_of(f);
      init[i] = pack(f, input >> in_off);
      in_off += width(f);
    }
    int arb_off = 0;
    for (const auto& f : layout_.outputs) {
      if (f.header == RoleHeader::InOut) continue;
      const auto i = index_of(f);
      if (f.header == RoleHeader::Out) {
        init[i] = pack(f, arbitrary >> arb_off);
        arb_off += width(f);
      } else {
        init[i] = pack(f, role_constant(f));
      }
    }
    for (const auto& f : layout_.auxiliaries) init[index_of(f)] = pack(f, role_constant(f));
    return init;
  }

  struct Result {
    detail::MachineResult machine;
    Bits outputs = 0;
  };

  Result run(Bits input, Bits arbitrary) {
    const std::vector<std::uint8_t> init = initial_states(input, arbitrary);
    state_.assign(compiled_.foci.size(), 0);
    for (std::size_t s = 0; s < state_.size(); ++s) {
      if (slot_to_layout_[s] >= 0) state_[s] = init[static_cast<std::size_t>(slot_to_layout_[s])];
    }
    detail::Limits limits;
    limits.detect_loops = loops_;
    Result r;
    r.machine = detail::execute(compiled_.code, slots_, state_, limits, detail::no_trace);
    if (r.machine.status != detail::Status::Terminated) return r;
    std::vector<std::uint8_t> final_state = init;
    for (std::size_t s = 0; s < state_.size(); ++s) {
      if (slot_to_layout_[s] >= 0) final_state[static_cast<std::size_t>(slot_to_layout_[s])] = state_[s];
    }
    int off = 0;
    for (std::size_t o = 0; o < layout_.outputs.size(); ++o) {
      const Focus& f = layout_.outputs[o];
      r.outputs |= unpack(f, final_state[static_cast<std::size_t>(output_index_[o])]) << off;
      off += width(f);
    }
    return r;
  }

 private:
  [[nodiscard]] std::size_t index_of(const Focus& f) const {
    return static_cast<std::size_t>(std::find(foci_.begin(), foci_.end(), f) - foci_.begin());
  }

  const RegisterLayout& layout_;
  detail::Compiled compiled_;
  std::vector<Focus> foci_;
  std::vector<KernelKind> kernel_kind_;
  std::vector<int> slot_to_layout_;
  std::vector<int> output_index_;
  std::vector<detail::SlotInfo> slots_;
  std::vector<std::uint8_t> state_;
  bool loops_ = false;
};

TableEntry entry_for(LayoutRunner& runner, Bits input, int arbitrary_bits) {
  TableEntry e;
  bool have = false;
  for (Bits a = 0; a < (Bits{1} << arbitrary_bits); ++a) {
    const auto r = runner.run(input, a);
    if (r.machine.status == detail::Status::Error) return TableEntry{EntryKind::Error, 0};
    if (r.machine.status == detail::Status::Diverged) return TableEntry{EntryKind::Diverged, 0};
    if (!have) {
      e.value = r.outputs;
      have = true;
    } else if (e.value != r.outputs) {
      e.kind = EntryKind::Inconsistent;
    }
  }
  if (e.kind == EntryKind::Inconsistent) e.value = 0;
  return e;
}

}  // namespace

std::string bits_str(Bits bits, int w) {
  if (w == 0) return "-";
  std::string out;
  for (int j = 0; j < w; ++j) out += ((bits >> j) & 1U) != 0 ? '1' : '0';
  return out;
}

Bits parse_bits(std::string_view text) {
  if (text == "-") return 0;
  if (text.size() > 64) throw std::invalid_argument("bit vector too long");
  Bits out = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') {
      out |= Bits{1} << j;
    } else if (text[j] != '0') {
      throw std::invalid_argument("bad bit vector '" + std::string(text) + "'");
    }
  }
  return out;
}

void RegisterLayout::validate() const {
  std::set<Focus> seen_in;
  std::set<Focus> seen_out;
  for (const auto& f : inputs) {
    if (!is_input_role(f.header)) throw std::invalid_argument("input focus " + f.str() + " needs role in or inout");
    if (!seen_in.insert(f).second) throw std::invalid_argument("duplicate focus " + f.str());
  }
  for (const auto& f : outputs) {
    if (!is_output_role(f.header)) throw std::invalid_argument("output focus " + f.str() + " has an input-only role");
    if (!seen_out.insert(f).second) throw std::invalid_argument("duplicate focus " + f.str());
    if (f.header == RoleHeader::InOut && !seen_in.contains(f)) {
      throw std::invalid_argument("inout output " + f.str() + " must also be an input");
    }
  }
  for (const auto& f : auxiliaries) {
    if (!is_aux_role(f.header)) throw std::invalid_argument("auxiliary focus " + f.str() + " needs a constant role (aux0, aux1, out0, out1)");
    if (seen_in.contains(f) || !seen_out.insert(f).second) throw std::invalid_argument("duplicate focus " + f.str());
  }
  if (input_bits() > 40) throw std::invalid_argument("too many input bits");
  if (output_bits() > 64) throw std::invalid_argument("too many output bits");
}

int RegisterLayout::input_bits() const {
  int n = 0;
  for (const auto& f : inputs) n += width(f);
  return n;
}

int RegisterLayout::output_bits() const {
  int n = 0;
  for (const auto& f : outputs) n += width(f);
  return n;
}

std::vector<Focus> RegisterLayout::arbitrary() const {
  std::vector<Focus> out;
  for (const auto& f : outputs) {
    if (f.header == RoleHeader::Out) out.push_back(f);
  }
  return out;
}

int RegisterLayout::arbitrary_bits() const {
  int n = 0;
  for (const auto& f : arbitrary()) n += width(f);
  return n;
}

std::vector<Focus> RegisterLayout::foci() const {
  std::vector<Focus> out = inputs;
  for (const auto& f : outputs) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  out.insert(out.end(), auxiliaries.begin(), auxiliaries.end());
  return out;
}

BasicActionInterface RegisterLayout::interface() const {
  BasicActionInterface out;
  for (const auto& f : foci()) out.add(f, f.is_array() ? MethodSet::all() : MethodSet::m16());
  return out;
}

std::vector<Focus> parse_focus_list(std::string_view text) {
  std::vector<Focus> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
    std::size_t j = i;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])) == 0) ++j;
    if (j > i) out.push_back(parse_focus(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

TaskSpec make_task(RegisterLayout layout, const std::function<Bits(Bits)>& f) {
  layout.validate();
  TaskSpec t;
  t.layout = std::move(layout);
  const int n = t.layout.input_bits();
  const Bits mask = t.layout.output_bits() >= 64 ? ~Bits{0} : (Bits{1} << t.layout.output_bits()) - 1;
  for (Bits x = 0; x < (Bits{1} << n); ++x) t.table[x] = f(x) & mask;
  return t;
}

TaskSpec parse_task(std::string_view text) {
  TaskSpec t;
  bool have_inputs = false;
  bool have_outputs = false;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())) != 0) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())) != 0) line.remove_suffix(1);
    if (line.empty()) continue;
    auto keyed = [&](std::string_view key) {
      return line.size() >= key.size() && line.substr(0, key.size()) == key;
    };
    try {
      if (keyed("inputs:")) {
        t.layout.inputs = parse_focus_list(line.substr(7));
        have_inputs = true;
      } else if (keyed("outputs:")) {
        t.layout.outputs = parse_focus_list(line.substr(8));
        have_outputs = true;
      } else if (keyed("aux:")) {
        t.layout.auxiliaries = parse_focus_list(line.substr(4));
      } else {
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw std::invalid_argument("expected 'in -> out'");
        std::string_view lhs = line.substr(0, arrow);
        std::string_view rhs = line.substr(arrow + 2);
        auto trim = [](std::string_view s) {
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
          return s;
        };
        lhs = trim(lhs);
        rhs = trim(rhs);
        if (lhs.empty()) lhs = "-";
        if (!have_inputs || !have_outputs) throw std::invalid_argument("table before inputs/outputs");
        const int nin = t.layout.input_bits();
        const int nout = t.layout.output_bits();
        if ((lhs == "-" ? 0 : static_cast<int>(lhs.size())) != nin) throw std::invalid_argument("input width mismatch");
        if ((rhs == "-" ? 0 : static_cast<int>(rhs.size())) != nout) throw std::invalid_argument("output width mismatch");
        if (!t.table.emplace(parse_bits(lhs), parse_bits(rhs)).second) throw std::invalid_argument("duplicate row");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("task line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_inputs || !have_outputs) throw std::invalid_argument("task needs 'inputs:' and 'outputs:' lines");
  t.layout.validate();
  return t;
}

std::string render_task(const TaskSpec& task) {
  std::ostringstream out;
  auto list = [&](const std::vector<Focus>& fs) {
    for (const auto& f : fs) out << ' ' << f.str();
    out << '\n';
  };
  out << "inputs:";
  list(task.layout.inputs);
  out << "outputs:";
  list(task.layout.outputs);
  if (!task.layout.auxiliaries.empty()) {
    out << "aux:";
    list(task.layout.auxiliaries);
  }
  for (const auto& [in, val] : task.table) {
    out << bits_str(in, task.layout.input_bits()) << " -> " << bits_str(val, task.layout.output_bits()) << '\n';
  }
  return out.str();
}

ServiceFamily initial_family(const RegisterLayout& layout, Bits input, Bits arbitrary) {
  layout.validate();
  // reuse the runner's initialisation on an empty program
  const InstructionSequence term({Instruction::term()}, Dialect::SinglePass);
  const LayoutRunner runner(term, layout);
  const std::vector<std::uint8_t> init = runner.initial_states(input, arbitrary);
  const std::vector<Focus> foci = layout.foci();
  ServiceFamily h;
  for (std::size_t i = 0; i < foci.size(); ++i) {
    Kernel k = foci[i].is_array() ? Kernel::array(false, false, false) : Kernel::reg(false);
    k.state = init[i];
    h.set(foci[i], k);
  }
  return h;
}

bool FunctionTable::total() const {
  return std::all_of(entries.begin(), entries.end(), [](const TableEntry& e) { return e.kind == EntryKind::Value; });
}

std::string FunctionTable::str() const {
  std::ostringstream out;
  for (std::size_t x = 0; x < entries.size(); ++x) {
    out << bits_str(x, input_bits) << " -> ";
    switch (entries[x].kind) {
      case EntryKind::Value: out << bits_str(entries[x].value, output_bits); break;
      case EntryKind::Diverged: out << "diverged"; break;
      case EntryKind::Error: out << "error"; break;
      case EntryKind::Inconsistent: out << "inconsistent"; break;
    }
    out << '\n';
  }
  return out.str();
}

FunctionTable extract_function(const InstructionSequence& seq, const RegisterLayout& layout, bool strict) {
  layout.validate();
  if (strict) {
    const BasicActionInterface req = required_interface(seq);
    if (!req.subinterface_of(layout.interface())) {
      throw InterfaceError("required interface " + req.str() + " not provided by the layout");
    }
  }
  LayoutRunner runner(seq, layout);
  FunctionTable t;
  t.input_bits = layout.input_bits();
  t.output_bits = layout.output_bits();
  const int arb = layout.arbitrary_bits();
  for (Bits x = 0; x < (Bits{1} << t.input_bits); ++x) t.entries.push_back(entry_for(runner, x, arb));
  return t;
}

CheckResult computes(const InstructionSequence& seq, const TaskSpec& task) {
  LayoutRunner runner(seq, task.layout);
  const int arb = task.layout.arbitrary_bits();
  const int nout = task.layout.output_bits();
  for (const auto& [x, want] : task.table) {
    for (Bits a = 0; a < (Bits{1} << arb); ++a) {
      const auto r = runner.run(x, a);
      CheckResult c;
      c.ok = false;
      c.input = x;
      c.arbitrary = a;
      const std::string where = "input " + bits_str(x, task.layout.input_bits()) +
                                (arb > 0 ? " init " + bits_str(a, arb) : std::string());
      if (r.machine.status == detail::Status::Error) {
        c.detail = where + ": error at " + std::to_string(r.machine.position);
        return c;
      }
      if (r.machine.status == detail::Status::Diverged) {
        c.detail = where + ": diverged at " + std::to_string(r.machine.position);
        return c;
      }
      if (r.outputs != want) {
        c.detail = where + ": got " + bits_str(r.outputs, nout) + ", want " + bits_str(want, nout);
        return c;
      }
    }
  }
  return CheckResult{};
}

bool equivalent(const InstructionSequence& a, const InstructionSequence& b, const RegisterLayout& layout) {
  return extract_function(a, layout, false) == extract_function(b, layout, false);
}

std::vector<std::optional<std::uint64_t>> nos_vector(const InstructionSequence& seq, const RegisterLayout& layout) {
  LayoutRunner runner(seq, layout);
  const int arb = layout.arbitrary_bits();
  std::vector<std::optional<std::uint64_t>> out;
  for (Bits x = 0; x < (Bits{1} << layout.input_bits()); ++x) {
    for (Bits a = 0; a < (Bits{1} << arb); ++a) {
      const auto r = runner.run(x, a);
      if (r.machine.status == detail::Status::Terminated) {
        out.emplace_back(r.machine.steps);
      } else {
        out.emplace_back(std::nullopt);
      }
    }
  }
  return out;
}

NosProfile nos_profile(const InstructionSequence& seq, const RegisterLayout& layout) {
  const auto v = nos_vector(seq, layout);
  const std::size_t per_input = std::size_t{1} << layout.arbitrary_bits();
  NosProfile p;
  bool infinite = false;
  std::uint64_t worst = 0;
  for (std::size_t x = 0; x * per_input < v.size(); ++x) {
    std::uint64_t w = 0;
    for (std::size_t a = 0; a < per_input; ++a) {
      const auto& s = v[x * per_input + a];
      if (!s) {
        infinite = true;
      } else {
        w = std::max(w, *s);
      }
    }
    worst = std::max(worst, w);
    p.total += w;
    ++p.inputs;
  }
  if (!infinite) p.worst = worst;
  return p;
}

std::string NosProfile::str() const {
  std::string out = "worst=" + (worst ? std::to_string(*worst) : std::string("inf"));
  if (!worst || inputs == 0) return out + " mean=inf";
  const std::uint64_t g = std::gcd(total, inputs);
  out += " mean=" + std::to_string(total / g);
  if (inputs / g != 1) out += "/" + std::to_string(inputs / g);
  return out;
}

}  // namespace isq
