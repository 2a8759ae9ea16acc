// Private execution core: programs compiled to slot-indexed instructions and
// run over a flat vector of kernel states. Shared by the public engine, the
// truth-table extractor and the minimiser.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "isq/service.hpp"
#include "isq/syntax.hpp"

namespace isq::detail {

struct CInstr {
  InstrKind kind = InstrKind::Term;
  Polarity pol = Polarity::Plain;
  std::int32_t slot = -1;
  Method method;
  std::uint32_t jump = 0;
};

struct SlotInfo {
  bool bound = false;
  KernelKind kind = KernelKind::Register;
  bool inactive = false;
  MethodSet methods;
};

/// Slots are the distinct foci of the program in order of first use.
struct Compiled {
  std::vector<CInstr> code;
  std::vector<Focus> foci;
};

Compiled compile(const InstructionSequence& seq);

enum class Status : std::uint8_t { Terminated, Diverged, Error };
enum class ErrorCause : std::uint8_t { None, Unbound, NotInInterface, Inactive };

struct MachineResult {
  Status status = Status::Diverged;
  std::uint64_t steps = 0;
  std::uint32_t position = 0;  // 1-based, where the run stopped
  ErrorCause cause = ErrorCause::None;
};

struct Limits {
  std::uint64_t max_steps = 0;  // 0: unlimited
  bool detect_loops = false;
};

inline void no_trace(std::uint32_t, int) {}

/// Runs from position 1. `on_step(position, reply)` is called for every
/// processed instruction, reply -1 for non-basic ones.
template <typename OnStep>
MachineResult execute(const std::vector<CInstr>& code, const std::vector<SlotInfo>& slots,
                      std::vector<std::uint8_t>& state, Limits limits, OnStep&& on_step) {
  MachineResult r;
  const auto n = static_cast<std::int64_t>(code.size());
  std::int64_t pc = 1;
  std::unordered_set<std::string> seen;
  std::string key;
  for (;;) {
    if (pc < 1 || pc > n) {
      r.status = Status::Diverged;
      r.position = static_cast<std::uint32_t>(pc < 1 ? 0 : pc);
      return r;
    }
    if (limits.max_steps != 0 && r.steps >= limits.max_steps) {
      r.status = Status::Diverged;
      r.position = static_cast<std::uint32_t>(pc);
      return r;
    }
    if (limits.detect_loops) {
      key.assign(reinterpret_cast<const char*>(&pc), sizeof pc);
      key.append(state.begin(), state.end());
      if (!seen.insert(key).second) {
        r.status = Status::Diverged;
        r.position = static_cast<std::uint32_t>(pc);
        return r;
      }
    }
    const CInstr& in = code[static_cast<std::size_t>(pc - 1)];
    r.position = static_cast<std::uint32_t>(pc);
    switch (in.kind) {
      case InstrKind::Term:
        ++r.steps;
        on_step(r.position, -1);
        r.status = Status::Terminated;
        return r;
      case InstrKind::FwdJump:
        ++r.steps;
        on_step(r.position, -1);
        if (in.jump == 0) {
          r.status = Status::Diverged;
          return r;
        }
        pc += in.jump;
        break;
      case InstrKind::BwdJump:
        ++r.steps;
        on_step(r.position, -1);
        if (in.jump == 0) {
          r.status = Status::Diverged;
          return r;
        }
        pc -= in.jump;
        break;
      case InstrKind::Basic: {
        const SlotInfo& slot = slots[static_cast<std::size_t>(in.slot)];
        ErrorCause cause = ErrorCause::None;
        if (!slot.bound) {
          cause = ErrorCause::Unbound;
        } else if (slot.inactive) {
          cause = ErrorCause::Inactive;
        } else if (!slot.methods.contains(in.method) ||
                   (slot.kind == KernelKind::Register && in.method.target == MethodTarget::IndexBit)) {
          cause = ErrorCause::NotInInterface;
        }
        if (cause != ErrorCause::None) {
          r.status = Status::Error;
          r.cause = cause;
          return r;
        }
        bool reply = false;
        auto& s = state[static_cast<std::size_t>(in.slot)];
        s = apply_bits(slot.kind, s, in.method, reply);
        ++r.steps;
        on_step(r.position, reply ? 1 : 0);
        if (in.pol == Polarity::Plain || (in.pol == Polarity::Pos) == reply) {
          pc += 1;
        } else {
          pc += 2;
        }
        break;
      }
    }
  }
}

}  // namespace isq::detail
