// Running instruction sequences against service families.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isq/service.hpp"
#include "isq/syntax.hpp"

namespace isq {

enum class RunStatus : std::uint8_t { Terminated, Diverged, Error };

struct RunOutcome {
  RunStatus status = RunStatus::Diverged;
  ServiceFamily final_family;  // meaningful for Terminated only
  std::uint64_t steps = 0;     // instructions processed, `!` included
  std::uint32_t position = 0;  // where the run stopped (1-based)
  std::string cause;           // error description

  [[nodiscard]] bool terminated() const noexcept { return status == RunStatus::Terminated; }
  /// `terminated steps=3`, `diverged`, `error at 1: focus in:3 unbound`
  [[nodiscard]] std::string str() const;
};

struct TraceStep {
  std::uint32_t position = 0;
  Instruction instr;
  std::optional<bool> reply;
};
using Trace = std::vector<TraceStep>;

/// Exact run. PGLB programs are stopped as Diverged when a
/// (position, state) pair repeats.
RunOutcome run(const InstructionSequence& seq, const ServiceFamily& h, Trace* trace = nullptr);

/// As run(), but without loop detection; Diverged once max_steps
/// instructions have been processed without termination.
RunOutcome run_bounded(const InstructionSequence& seq, const ServiceFamily& h, std::uint64_t max_steps);

/// Number of steps, nullopt standing for infinity (divergence or error).
std::optional<std::uint64_t> nos(const InstructionSequence& seq, const ServiceFamily& h);
std::string nos_str(const std::optional<std::uint64_t>& n);

/// X . H: the final family, or the empty family on error or divergence.
ServiceFamily apply(const InstructionSequence& seq, const ServiceFamily& h);

std::string render_trace(const Trace& trace);

}  // namespace isq
