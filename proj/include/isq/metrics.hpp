// Syntactic size metrics and class predicates.

#pragma once

#include <cstdint>
#include <string>

#include "isq/interface.hpp"
#include "isq/syntax.hpp"

namespace isq {

inline std::size_t lloc(const InstructionSequence& seq) { return seq.size(); }

struct ClassReport {
  bool single_pass = true;
  std::uint32_t max_jump = 0;
  bool single_visit = true;           // at most one basic instruction per focus
  bool only_final_termination = true;  // the only `!` is the last instruction
  bool low_register_indices = true;   // per role, indices form 1..k

  [[nodiscard]] std::string str() const;
  bool operator==(const ClassReport&) const = default;
};

ClassReport classify(const InstructionSequence& seq);

/// Focus -> methods over all basic instructions, polarity ignored.
BasicActionInterface required_interface(const InstructionSequence& seq);

}  // namespace isq
