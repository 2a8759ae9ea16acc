// Translations from PGLB (backward jumps) to single-pass programs.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isq/function.hpp"
#include "isq/syntax.hpp"

namespace isq {

/// Z: forward jumps leaving the program and backward jumps reaching before
/// position 1 become #0, other backward jumps \#k become #(n-k).
InstructionSequence unfold_pglb(const InstructionSequence& x);

/// Z;Z;...;Z, p copies.
InstructionSequence power(const InstructionSequence& z, unsigned p);

struct UnfoldResult {
  InstructionSequence z{{Instruction::term()}, Dialect::SinglePass};
  unsigned p = 0;
  InstructionSequence program{{Instruction::term()}, Dialect::SinglePass};  // power(z, p)
};

/// Smallest p that covers every run that stops (terminates or errors):
/// one more than the largest number of backward jumps such a run takes,
/// but never below ceil(max NOS / LLOC) + 1. nullopt when no run terminates.
std::optional<unsigned> auto_power(const InstructionSequence& x, const RegisterLayout& layout);

/// unfold + auto_power; throws std::invalid_argument when p is undefined.
UnfoldResult unfold_auto(const InstructionSequence& x, const RegisterLayout& layout);

struct CompileResult {
  InstructionSequence program{{Instruction::term()}, Dialect::SinglePass};
  std::vector<Bits> dropped;  // inputs on which the source does not terminate
};

/// Truth-table compilation: extract the function, then build the universal
/// program for it (undefined inputs are dropped and mapped to all zeros).
CompileResult compile_pglb_tt(const InstructionSequence& x, const RegisterLayout& layout);

}  // namespace isq
