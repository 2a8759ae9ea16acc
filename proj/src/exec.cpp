#include "isq/exec.hpp"

#include <map>
#include <sstream>

#include "machine.hpp"

namespace isq {

namespace detail {

Compiled compile(const InstructionSequence& seq) {
  Compiled c;
  std::map<Focus, std::int32_t> slot_of;
  c.code.reserve(seq.size());
  for (const auto& in : seq.instrs()) {
    CInstr ci;
    ci.kind = in.kind;
    ci.jump = in.jump;
    if (in.is_basic()) {
      auto [it, fresh] = slot_of.emplace(in.focus, static_cast<std::int32_t>(c.foci.size()));
      if (fresh) c.foci.push_back(in.focus);
      ci.slot = it->second;
      ci.pol = in.polarity;
      ci.method = in.method;
    }
    c.code.push_back(ci);
  }
  return c;
}

}  // namespace detail

namespace {

RunOutcome run_impl(const InstructionSequence& seq, const ServiceFamily& h, detail::Limits limits, Trace* trace) {
  const detail::Compiled c = detail::compile(seq);
  std::vector<detail::SlotInfo> slots(c.foci.size());
  std::vector<std::uint8_t> state(c.foci.size(), 0);
  for (std::size_t i = 0; i < c.foci.size(); ++i) {
    if (const Kernel* k = h.find(c.foci[i])) {
      slots[i] = detail::SlotInfo{true, k->kind, k->inactive, k->methods};
      state[i] = k->state;
    }
  }
  auto on_step = [&](std::uint32_t pos, int reply) {
    if (trace == nullptr) return;
    TraceStep s{pos, seq.at(pos), std::nullopt};
    if (reply >= 0) s.reply = reply == 1;
    trace->push_back(std::move(s));
  };
  const detail::MachineResult m = detail::execute(c.code, slots, state, limits, on_step);

  RunOutcome out;
  out.steps = m.steps;
  out.position = m.position;
  switch (m.status) {
    case detail::Status::Terminated: {
      out.status = RunStatus::Terminated;
      out.final_family = h;
      for (std::size_t i = 0; i < c.foci.size(); ++i) {
        if (!slots[i].bound) continue;
        Kernel k = *h.find(c.foci[i]);
        k.state = state[i];
        out.final_family.set(c.foci[i], k);
      }
      break;
    }
    case detail::Status::Diverged:
      out.status = RunStatus::Diverged;
      break;
    case detail::Status::Error: {
      out.status = RunStatus::Error;
      const Instruction& in = seq.at(m.position);
      switch (m.cause) {
        case detail::ErrorCause::Unbound: out.cause = "focus " + in.focus.str() + " unbound"; break;
        case detail::ErrorCause::Inactive: out.cause = "focus " + in.focus.str() + " inactive"; break;
        default: out.cause = "method " + in.method.str() + " not offered by " + in.focus.str(); break;
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string RunOutcome::str() const {
  switch (status) {
    case RunStatus::Terminated: return "terminated steps=" + std::to_string(steps);
    case RunStatus::Diverged: return "diverged at " + std::to_string(position);
    case RunStatus::Error: return "error at " + std::to_string(position) + ": " + cause;
  }
  return {};
}

RunOutcome run(const InstructionSequence& seq, const ServiceFamily& h, Trace* trace) {
  detail::Limits limits;
  for (const auto& in : seq.instrs()) limits.detect_loops |= in.kind == InstrKind::BwdJump;
  return run_impl(seq, h, limits, trace);
}

RunOutcome run_bounded(const InstructionSequence& seq, const ServiceFamily& h, std::uint64_t max_steps) {
  if (max_steps == 0) {
    RunOutcome out;
    out.status = RunStatus::Diverged;
    out.position = 1;
    return out;
  }
  detail::Limits limits;
  limits.max_steps = max_steps;
  return run_impl(seq, h, limits, nullptr);
}

std::optional<std::uint64_t> nos(const InstructionSequence& seq, const ServiceFamily& h) {
  const RunOutcome r = run(seq, h);
  if (!r.terminated()) return std::nullopt;
  return r.steps;
}

std::string nos_str(const std::optional<std::uint64_t>& n) { return n ? std::to_string(*n) : "inf"; }

ServiceFamily apply(const InstructionSequence& seq, const ServiceFamily& h) {
  RunOutcome r = run(seq, h);
  return r.terminated() ? std::move(r.final_family) : ServiceFamily{};
}

std::string render_trace(const Trace& trace) {
  std::ostringstream out;
  for (const auto& s : trace) {
    out << s.position << '\t' << s.instr.str() << '\t';
    if (s.reply) {
      out << (*s.reply ? '1' : '0');
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace isq
