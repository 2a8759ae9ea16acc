#include "isq/unfold.hpp"

#include <algorithm>
#include <stdexcept>

#include "isq/exec.hpp"
#include "isq/generators.hpp"

namespace isq {

InstructionSequence unfold_pglb(const InstructionSequence& x) {
  const std::size_t n = x.size();
  std::vector<Instruction> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Instruction& u = x.at(i);
    if (u.kind == InstrKind::FwdJump) {
      out.push_back(i + u.jump <= n ? u : Instruction::fwd(0));
    } else if (u.kind == InstrKind::BwdJump) {
      out.push_back(u.jump >= i ? Instruction::fwd(0) : Instruction::fwd(static_cast<std::uint32_t>(n - u.jump)));
    } else {
      out.push_back(u);
    }
  }
  return InstructionSequence(std::move(out), Dialect::SinglePass);
}

InstructionSequence power(const InstructionSequence& z, unsigned p) {
  if (p == 0) throw std::invalid_argument("power needs p >= 1");
  std::vector<Instruction> out;
  out.reserve(z.size() * p);
  for (unsigned c = 0; c < p; ++c) out.insert(out.end(), z.instrs().begin(), z.instrs().end());
  return InstructionSequence(std::move(out), z.dialect());
}

std::optional<unsigned> auto_power(const InstructionSequence& x, const RegisterLayout& layout) {
  layout.validate();
  const Bits inputs = Bits{1} << layout.input_bits();
  const Bits arbs = Bits{1} << layout.arbitrary_bits();
  bool any_terminating = false;
  std::uint64_t max_nos = 0;
  std::uint64_t max_back = 0;
  Trace trace;
  for (Bits in = 0; in < inputs; ++in) {
    for (Bits a = 0; a < arbs; ++a) {
      trace.clear();
      const RunOutcome r = run(x, initial_family(layout, in, a), &trace);
      if (r.status == RunStatus::Diverged) continue;
      const auto back = static_cast<std::uint64_t>(std::count_if(
          trace.begin(), trace.end(), [](const TraceStep& s) { return s.instr.kind == InstrKind::BwdJump; }));
      max_back = std::max(max_back, back);
      if (r.terminated()) {
        any_terminating = true;
        max_nos = std::max(max_nos, r.steps);
      }
    }
  }
  if (!any_terminating) return std::nullopt;
  // Each pass through Z covers the stretch between two backward jumps, so
  // 1 + max_back copies always suffice. The NOS-based count is kept as a
  // floor so that p never falls below it.
  const std::uint64_t by_nos = (max_nos + x.size() - 1) / x.size() + 1;
  return static_cast<unsigned>(std::max(max_back + 1, by_nos));
}

UnfoldResult unfold_auto(const InstructionSequence& x, const RegisterLayout& layout) {
  const auto p = auto_power(x, layout);
  if (!p) throw std::invalid_argument("no input terminates; p is undefined");
  UnfoldResult r;
  r.z = unfold_pglb(x);
  r.p = *p;
  r.program = power(r.z, r.p);
  return r;
}

CompileResult compile_pglb_tt(const InstructionSequence& x, const RegisterLayout& layout) {
  const FunctionTable t = extract_function(x, layout, false);
  TaskSpec task;
  task.layout = layout;
  CompileResult r;
  for (std::size_t in = 0; in < t.entries.size(); ++in) {
    if (t.entries[in].kind == EntryKind::Value) {
      task.table[in] = t.entries[in].value;
    } else {
      task.table[in] = 0;
      r.dropped.push_back(in);
    }
  }
  r.program = gen_universal(task);
  return r;
}

}  // namespace isq
