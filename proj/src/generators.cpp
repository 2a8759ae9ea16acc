#include "isq/generators.hpp"

#include <stdexcept>

namespace isq {

namespace {

using std::to_string;

InstructionSequence sp(const std::string& text) { return parse(text, Dialect::SinglePass); }

Focus in_focus(unsigned l) { return Focus::scalar(RoleHeader::In, l); }
Focus out0_focus(unsigned l) { return Focus::scalar(RoleHeader::Out0, l); }

void require_positive(unsigned v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

// One addressable bit: a scalar focus, or one cell of an array.
struct BitRef {
  Focus focus;
  int cell = -1;  // -1 for a scalar
};

std::vector<BitRef> bit_refs(const std::vector<Focus>& foci) {
  std::vector<BitRef> out;
  for (const auto& f : foci) {
    if (f.is_array()) {
      out.push_back({f, 0});
      out.push_back({f, 1});
    } else {
      out.push_back({f, -1});
    }
  }
  return out;
}

// Array cells are reached by first setting the index bit explicitly.
void select_cell(const BitRef& b, std::vector<Instruction>& out) {
  if (b.cell < 0) return;
  const Code c = b.cell == 1 ? Code::One : Code::Zero;
  out.push_back(Instruction::basic(Polarity::Plain, b.focus, Method{MethodTarget::IndexBit, c, c}));
}

void universal_rec(const TaskSpec& f, const std::vector<BitRef>& ins, const std::vector<BitRef>& outs,
                   std::size_t n, Bits fixed, std::vector<Instruction>& out) {
  if (n == 0) {
    const auto it = f.table.find(fixed);
    if (it == f.table.end()) throw std::invalid_argument("gen_universal needs a total task");
    for (std::size_t k = 0; k < outs.size(); ++k) {
      const bool d = ((it->second >> k) & 1U) != 0;
      select_cell(outs[k], out);
      out.push_back(Instruction::basic(Polarity::Plain, outs[k].focus,
                                       Method{MethodTarget::Direct, Code::One, d ? Code::One : Code::Zero}));
    }
    out.push_back(Instruction::term());
    return;
  }
  const BitRef& x = ins[n - 1];
  select_cell(x, out);
  out.push_back(Instruction::basic(Polarity::Pos, x.focus, Method{MethodTarget::Direct, Code::Keep, Code::Keep}));
  const std::size_t jump_at = out.size();
  out.push_back(Instruction::fwd(0));
  universal_rec(f, ins, outs, n - 1, fixed, out);
  out[jump_at].jump = static_cast<std::uint32_t>(out.size() - jump_at);
  universal_rec(f, ins, outs, n - 1, fixed | (Bits{1} << (n - 1)), out);
}

std::string range_writes(unsigned from, unsigned to, const std::string& role, const std::string& method) {
  std::string s;
  for (unsigned l = from; l <= to; ++l) s += role + ":" + to_string(l) + "." + method + ";";
  return s;
}

}  // namespace

std::uint64_t l_bound(unsigned n, unsigned m) {
  require_positive(m, "m");
  if (n > 60) throw std::invalid_argument("n too large");
  return (std::uint64_t{1} << n) * (m + 3) - 2;
}

std::uint64_t l_bound_recursive(unsigned n, unsigned m) {
  require_positive(m, "m");
  std::uint64_t v = m + 1;
  for (unsigned i = 0; i < n; ++i) v = 2 * v + 2;
  return v;
}

RegisterLayout io_layout(unsigned n, unsigned m) {
  RegisterLayout l;
  for (unsigned i = 1; i <= n; ++i) l.inputs.push_back(in_focus(i));
  for (unsigned i = 1; i <= m; ++i) l.outputs.push_back(out0_focus(i));
  return l;
}

InstructionSequence gen_universal(const TaskSpec& f) {
  require_positive(static_cast<unsigned>(f.layout.outputs.size()), "output count");
  const std::vector<BitRef> ins = bit_refs(f.layout.inputs);
  const std::vector<BitRef> outs = bit_refs(f.layout.outputs);
  std::vector<Instruction> out;
  universal_rec(f, ins, outs, ins.size(), 0, out);
  return InstructionSequence(std::move(out), Dialect::SinglePass);
}

// ---- parity ---------------------------------------------------------------

TaskSpec parity_task(unsigned n) {
  return make_task(io_layout(n, 1), [](Bits x) { return static_cast<Bits>(__builtin_popcountll(x) & 1); });
}

BasicActionInterface parity_interface(unsigned n) {
  BasicActionInterface i;
  for (unsigned l = 1; l <= n; ++l) i.add(in_focus(l), parse_method("i/i"));
  i.add(out0_focus(1), parse_method("1/1"));
  return i;
}

BasicActionInterface parity_aux_interface(unsigned n) {
  BasicActionInterface i = parity_interface(n);
  i.add(Focus::scalar(RoleHeader::Aux0, 1), MethodSet{parse_method("i/c"), parse_method("i/i")});
  return i;
}

GscSequence paris0_gsc(unsigned n) {
  GscSequence g;
  if (n == 0) return g.plain("!");
  if (n == 1) return g.plain("+in:1.i/i;out0:1.1/1;!");
  g.plain("+in:1.i/i");
  g.repeat(make_repeat(n - 1, "l", "#4;+in:l.i/i;#3;#3;-in:l.i/i", 2));
  g.plain("out0:1.1/1;!");
  return g;
}

InstructionSequence gen_paris0(unsigned n) { return expand_gsc(paris0_gsc(n)); }

InstructionSequence gen_paris1(unsigned n) {
  if (n == 0) return sp("!");
  if (n == 1) return gen_paris0(1);
  GscSequence g;
  g.repeat(make_repeat(n, "l", "+in:l.i/i;aux0:1.i/c"));
  g.plain("+aux0:1.i/i;out0:1.1/1;!");
  return expand_gsc(g);
}

// ---- addition -------------------------------------------------------------

TaskSpec add_task(unsigned n, AddVariant v) {
  require_positive(n, "n");
  RegisterLayout l;
  for (unsigned k = 1; k <= n; ++k) l.inputs.push_back(Focus::scalar(RoleHeader::In, k, "_a"));
  for (unsigned k = 1; k <= n; ++k) l.inputs.push_back(Focus::scalar(RoleHeader::In, k, "_b"));
  for (unsigned k = 1; k <= n + 1; ++k) l.outputs.push_back(out0_focus(k));
  if (v == AddVariant::A) l.auxiliaries.push_back(Focus::scalar(RoleHeader::Aux0, 1));
  const Bits mask = (Bits{1} << n) - 1;
  return make_task(std::move(l), [n, mask](Bits x) { return (x & mask) + (x >> n); });
}

BasicActionInterface add_interface(unsigned n, AddVariant v) {
  BasicActionInterface i;
  for (unsigned l = 1; l <= n; ++l) {
    i.add(Focus::scalar(RoleHeader::In, l, "_a"), parse_method("i/i"));
    i.add(Focus::scalar(RoleHeader::In, l, "_b"), parse_method("i/i"));
  }
  switch (v) {
    case AddVariant::A:
      for (unsigned l = 1; l <= n + 1; ++l) i.add(out0_focus(l), parse_method("1/1"));
      i.add(Focus::scalar(RoleHeader::Aux0, 1), MethodSet{parse_method("i/0"), parse_method("1/1")});
      break;
    case AddVariant::A1:
    case AddVariant::A2:
      for (unsigned l = 1; l <= n; ++l) i.add(out0_focus(l), parse_method("1/1"));
      i.add(out0_focus(n + 1), MethodSet{parse_method("i/i"), parse_method("i/1"), parse_method("i/0")});
      break;
    case AddVariant::A3:
      for (unsigned l = 1; l <= n + 1; ++l) i.add(out0_focus(l), parse_method("i/c"));
      i.add(out0_focus(n + 1), parse_method("i/0"));
      break;
  }
  return i;
}

GscSequence add_gsc(unsigned n, AddVariant v) {
  require_positive(n, "n");
  const std::string top = to_string(n + 1);
  GscSequence g;
  switch (v) {
    case AddVariant::A:
      g.repeat(make_repeat(n, "k",
                           "+in_a:k.i/i;-in_b:k.i/i;#4;+aux0:1.i/1;#9;#9;"
                           "-in_a:k.i/i;+in_b:k.i/i;#4;+aux0:1.i/0;#3;#3;"
                           "-aux0:1.i/i;out0:k.1/1"));
      g.plain("+aux0:1.i/0;out0:" + top + ".1/1;!");
      break;
    case AddVariant::A1:
      g.repeat(make_repeat(n, "k",
                           "+in_a:k.i/i;-in_b:k.i/i;#4;+out0:" + top + ".i/1;#9;#9;" +
                               "-in_a:k.i/i;+in_b:k.i/i;#4;+out0:" + top + ".i/0;#3;#3;" +
                               "-out0:" + top + ".i/i;out0:k.1/1"));
      g.plain("!");
      break;
    case AddVariant::A2:
      g.plain("+in_a:1.i/i;-in_b:1.i/i;#3;out0:" + top + ".i/1;#4;-in_a:1.i/i;+in_b:1.i/i;out0:1.1/1");
      if (n > 1) {
        g.repeat(make_repeat(n - 1, "k",
                             "+in_a:k.i/i;-in_b:k.i/i;#4;+out0:" + top + ".i/1;#9;#9;" +
                                 "-in_a:k.i/i;+in_b:k.i/i;#4;+out0:" + top + ".i/0;#3;#3;" +
                                 "-out0:" + top + ".i/i;out0:k.1/1",
                             2));
      }
      g.plain("!");
      break;
    case AddVariant::A3:
      // Ripple without a carry register: adding a bit to out0:k complements
      // it and propagates into out0:k+1 when it was already set.
      g.plain("+in_a:1.i/i;out0:1.i/c;-in_b:1.i/i;#3;+out0:1.i/c;out0:2.i/c");
      if (n > 1) {
        g.repeat(make_repeat(n - 1, "k",
                             "-in_a:k.i/i;#3;+out0:k.i/c;out0:(k+1).i/c;"
                             "-in_b:k.i/i;#3;+out0:k.i/c;out0:(k+1).i/c",
                             2));
      }
      g.plain("!");
      break;
  }
  return g;
}

InstructionSequence gen_add(unsigned n, AddVariant v) { return expand_gsc(add_gsc(n, v)); }

std::uint64_t add_lloc_formula(unsigned n, AddVariant v) {
  switch (v) {
    case AddVariant::A: return 14ULL * n + 3;
    case AddVariant::A1: return 14ULL * n + 1;
    case AddVariant::A2: return 14ULL * n - 5;
    case AddVariant::A3: return 8ULL * n;
  }
  return 0;
}

// ---- Example 1 ------------------------------------------------------------

TaskSpec g_task(unsigned k) {
  require_positive(k, "k");
  const Bits low = (Bits{1} << k) - 1;
  return make_task(io_layout(1, 2 * k), [k, low](Bits x) { return x == 0 ? low : low << k; });
}

InstructionSequence gen_example_g(unsigned k) {
  require_positive(k, "k");
  std::string s = "+in:1.i/i;#" + to_string(k + 2) + ";";
  s += range_writes(1, k, "out0", "1/1") + "!;";
  s += range_writes(k + 1, 2 * k, "out0", "1/1") + "!";
  return sp(s);
}

InstructionSequence gen_example_g_short(unsigned k) {
  require_positive(k, "k");
  std::string s = "-in:1.i/i;";
  for (unsigned l = 1; l < k; ++l) s += "-out0:" + to_string(l) + ".1/1;-out0:" + to_string(k + l) + ".1/1;";
  s += "-out0:" + to_string(k) + ".1/1;out0:" + to_string(2 * k) + ".1/1;!";
  return sp(s);
}

BasicActionInterface g_interface(unsigned k) {
  BasicActionInterface i;
  i.add(in_focus(1), parse_method("i/i"));
  for (unsigned l = 1; l <= 2 * k; ++l) i.add(out0_focus(l), parse_method("1/1"));
  return i;
}

// ---- Example 2 ------------------------------------------------------------

RegisterLayout e_layout(unsigned k) {
  require_positive(k, "k");
  RegisterLayout l;
  l.inputs.push_back(Focus::scalar(RoleHeader::InOut, 1));
  for (unsigned i = 1; i <= k; ++i) l.inputs.push_back(Focus::scalar(RoleHeader::InOut, i, "_a"));
  for (unsigned i = 1; i <= k; ++i) l.inputs.push_back(Focus::scalar(RoleHeader::InOut, i, "_b"));
  l.outputs = l.inputs;
  for (unsigned i = 1; i <= k; ++i) l.outputs.push_back(Focus::scalar(RoleHeader::Out0, i, "_a"));
  for (unsigned i = 1; i <= k; ++i) l.outputs.push_back(Focus::scalar(RoleHeader::Out0, i, "_b"));
  return l;
}

TaskSpec e_task(unsigned k) {
  const RegisterLayout layout = e_layout(k);
  const FunctionTable t = extract_function(gen_example_e(k, EVariant::X), layout);
  TaskSpec task;
  task.layout = layout;
  for (std::size_t x = 0; x < t.entries.size(); ++x) task.table[x] = t.entries[x].value;
  return task;
}

InstructionSequence gen_example_e(unsigned k, EVariant v) {
  require_positive(k, "k");
  std::string s = "+inout:1.i/c;";
  if (v == EVariant::X) {
    s += "#" + to_string(2 * k + 2) + ";";
    for (unsigned l = 1; l <= k; ++l) s += "+inout_a:" + to_string(l) + ".i/c;out0_a:" + to_string(l) + ".1/1;";
  } else {
    for (unsigned l = 1; l <= k; ++l) {
      s += "#3;+inout_a:" + to_string(l) + ".i/c;-out0_a:" + to_string(l) + ".1/1;";
    }
    s += "#2;";
  }
  s += "!;";
  for (unsigned l = 1; l <= k; ++l) s += "+inout_b:" + to_string(l) + ".i/c;out0_b:" + to_string(l) + ".1/1;";
  s += "!";
  return sp(s);
}

BasicActionInterface e_interface(unsigned k) {
  BasicActionInterface i;
  i.add(Focus::scalar(RoleHeader::InOut, 1), parse_method("i/c"));
  for (unsigned l = 1; l <= k; ++l) {
    i.add(Focus::scalar(RoleHeader::InOut, l, "_a"), parse_method("i/c"));
    i.add(Focus::scalar(RoleHeader::InOut, l, "_b"), parse_method("i/c"));
    i.add(Focus::scalar(RoleHeader::Out0, l, "_a"), parse_method("1/1"));
    i.add(Focus::scalar(RoleHeader::Out0, l, "_b"), parse_method("1/1"));
  }
  return i;
}

// ---- bounded jumps ----------------------------------------------------------

std::uint64_t bounded_jump_lloc(unsigned n, unsigned m) {
  if (n == 0) return m + 1;
  return (2ULL * n + 2ULL * m + 1) * (std::uint64_t{1} << n) + 1;
}

InstructionSequence gen_bounded_jump(const TaskSpec& f) {
  if (!f.total()) throw std::invalid_argument("gen_bounded_jump needs a total task");
  const auto& ins = f.layout.inputs;
  const auto& outs = f.layout.outputs;
  for (const auto& x : ins) {
    if (x.is_array()) throw std::invalid_argument("scalar inputs only");
  }
  for (const auto& y : outs) {
    if (y.is_array()) throw std::invalid_argument("scalar outputs only");
  }
  auto code = [](bool b) { return b ? Code::One : Code::Zero; };
  std::vector<Instruction> out;
  if (ins.empty()) {
    const Bits v = f.table.at(0);
    for (std::size_t j = 0; j < outs.size(); ++j) {
      out.push_back(Instruction::basic(Polarity::Plain, outs[j], Method{MethodTarget::Direct, Code::One, code(((v >> j) & 1U) != 0)}));
    }
    out.push_back(Instruction::term());
    return InstructionSequence(std::move(out), Dialect::SinglePass);
  }
  for (Bits alpha = 0; alpha < (Bits{1} << ins.size()); ++alpha) {
    // Detector: a mismatch on any input enters the chain of #2 jumps that
    // runs through the rest of the block.
    for (std::size_t j = 0; j < ins.size(); ++j) {
      const bool want = ((alpha >> j) & 1U) != 0;
      out.push_back(Instruction::basic(Polarity::Neg, ins[j], Method{MethodTarget::Direct, want ? Code::Keep : Code::Flip, Code::Keep}));
      out.push_back(Instruction::fwd(2));
    }
    // Writes reply 0 and so skip the chain's jumps.
    const Bits v = f.table.at(alpha);
    for (std::size_t j = 0; j < outs.size(); ++j) {
      out.push_back(Instruction::basic(Polarity::Pos, outs[j], Method{MethodTarget::Direct, Code::Zero, code(((v >> j) & 1U) != 0)}));
      out.push_back(Instruction::fwd(2));
    }
    out.push_back(Instruction::term());
  }
  out.push_back(Instruction::term());
  return InstructionSequence(std::move(out), Dialect::SinglePass);
}

// ---- 1D arrays ----------------------------------------------------------------

InstructionSequence gen_copy1d() {
  return parse("+in1D:3.i/i;out1D0:7.1/1;out1D0:7.a1:i/c;+in1D:3.a1:i/c;!;\\#5", Dialect::PGLB);
}

TaskSpec copy1d_task() {
  RegisterLayout l;
  l.inputs.push_back(Focus::array(RoleHeader::In, 3));
  l.outputs.push_back(Focus::array(RoleHeader::Out0, 7));
  return make_task(std::move(l), [](Bits x) { return x; });
}

// ---- complementation ------------------------------------------------------------

ComplementCase complement_case(int id) {
  const Focus in1 = in_focus(1);
  const Focus inout1 = Focus::scalar(RoleHeader::InOut, 1);
  const Focus out0_1 = out0_focus(1);
  const Focus out1 = Focus::scalar(RoleHeader::Out, 1);
  RegisterLayout layout;
  ComplementCase c{id, {}, {}, sp("!"), 0};
  switch (id) {
    case 1:
      c.iface.add(inout1, MethodSet::m16());
      layout.inputs = {inout1};
      layout.outputs = {inout1};
      c.program = sp("inout:1.1/c;!");
      c.claimed_min = 2;
      break;
    case 2:
      c.iface.add(in1, MethodSet::m16()).add(out0_1, MethodSet::m16());
      layout.inputs = {in1};
      layout.outputs = {out0_1};
      c.program = sp("-in:1.i/i;out0:1.1/1;!");
      c.claimed_min = 3;
      break;
    case 3:
      c.iface.add(in1, MethodSet::m16()).add(out1, MethodSet::m16());
      layout.inputs = {in1};
      layout.outputs = {out1};
      c.program = sp("-in:1.i/i;+out:1.0/1;out:1.0/0;!");
      c.claimed_min = 4;
      break;
    case 4:
      c.iface.add(inout1, MethodSet{parse_method("i/i"), parse_method("1/1"), parse_method("1/0")});
      layout.inputs = {inout1};
      layout.outputs = {inout1};
      c.program = sp("-inout:1.i/i;-inout:1.1/1;inout:1.1/0;!");
      c.claimed_min = 4;
      break;
    case 5:
      c.iface.add(in1, parse_method("c/0")).add(out0_1, parse_method("1/c"));
      layout.inputs = {in1};
      layout.outputs = {out0_1};
      c.program = sp("+in:1.c/0;out0:1.1/c;!");
      c.claimed_min = 3;
      break;
    case 6:
      c.iface.add(in1, parse_method("i/i")).add(out1, MethodSet{parse_method("i/0"), parse_method("i/1")});
      layout.inputs = {in1};
      layout.outputs = {out1};
      c.program = sp("out:1.i/0;-in:1.i/i;out:1.i/1;!");
      c.claimed_min = 4;
      break;
    case 7:
      c.iface.add(in1, parse_method("i/i")).add(out1, parse_method("i/c"));
      layout.inputs = {in1};
      layout.outputs = {out1};
      c.program = sp("-out:1.i/c;out:1.i/c;-in:1.i/i;out:1.i/c;!");
      c.claimed_min = 5;
      break;
    default:
      throw std::invalid_argument("complement case must be 1..7");
  }
  c.task = make_task(std::move(layout), [](Bits x) { return x ^ 1U; });
  return c;
}

// ---- repairs --------------------------------------------------------------------

const std::vector<Repair>& repair_log() {
  static const std::vector<Repair> log = {
      {"universal base case", "out0:1.1/d_k for k = 1..m", "out0:k.1/d_k",
       "a single focus cannot carry m outputs"},
      {"complement X_2", "+in:1.i/i;out0:1.1/1;!", "-in:1.i/i;out0:1.1/1;!",
       "printed test polarity computes the identity"},
      {"complement X_3", "+in:1.i/i;+out:1.0/1;out:1.0/0;!", "-in:1.i/i;+out:1.0/1;out:1.0/0;!",
       "printed test polarity computes the identity"},
      {"complement X_4", "+inout:1.i/i;-inout:1.1/1;inout:1.1/0;!", "-inout:1.i/i;-inout:1.1/1;inout:1.1/0;!",
       "printed test polarity computes the identity"},
      {"complement X_5", "+in:1.c/0;out0:1.0/c;!", "+in:1.c/0;out0:1.1/c;!",
       "0/c is outside the stated interface out0:1.{1/c}; same effect"},
      {"example G, X^k_G", "-in:1.i/i;#k+2;...", "+in:1.i/i;#k+2;...",
       "printed program sets out0:1..k on input 1, the definition asks for input 0"},
      {"example G, Y^k_G", "+in:1.i/i;...", "-in:1.i/i;...",
       "printed program sets out0:1..k on input 1, the definition asks for input 0"},
      {"Add'''_n line 1", "out0:1/c and +out0:i/c", "out0:1.i/c and +out0:1.i/c",
       "ill-formed foci; completed with the index of the bit being added"},
      {"Add'''_n groups", "+out0:i/c;out0:(n+1).i/c", "+out0:k.i/c;out0:(k+1).i/c",
       "ill-formed focus; the carry goes into the next bit, not the top one"},
      {"Copy1D", "out1D:7.1/c", "out1D0:7.a1:i/c",
       "the third instruction must advance the destination index; complementing the cell undoes the write"},
      {"Copy1D", "\\5", "\\#5", "backward jump spelling"},
  };
  return log;
}

std::string render_repair_log() {
  std::string out;
  for (const auto& r : repair_log()) out += r.subject + "\t" + r.printed + "\t" + r.emitted + "\t" + r.reason + "\n";
  return out;
}

}  // namespace isq
