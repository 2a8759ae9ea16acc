// Constructors for the program families studied here, with their tasks,
// interfaces and size formulas.
//
// Where a published display is ill-formed or does not compute its stated
// task, the generator emits a minimally edited program; every such edit is
// listed in repair_log().

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isq/function.hpp"
#include "isq/gsc.hpp"
#include "isq/interface.hpp"
#include "isq/syntax.hpp"

namespace isq {

// ---- universal construction -------------------------------------------

/// l(n, m) = 2^n (m + 3) - 2, the size of the universal construction.
std::uint64_t l_bound(unsigned n, unsigned m);
/// Same via l(0, m) = m + 1, l(n + 1, m) = 2 l(n, m) + 2.
std::uint64_t l_bound_recursive(unsigned n, unsigned m);

/// Layout in:1..n -> out0:1..m.
RegisterLayout io_layout(unsigned n, unsigned m);

/// Decision-tree program for a total task over scalar inputs: test the last
/// input, jump over the 0-branch, recurse. LLOC l(n, m).
InstructionSequence gen_universal(const TaskSpec& f);

// ---- parity -------------------------------------------------------------

/// in:1..n -> out0:1 with P = xor of the inputs.
TaskSpec parity_task(unsigned n);
/// I^n = sum in:l.{i/i} + out0:1.{1/1}
BasicActionInterface parity_interface(unsigned n);
/// I^n + aux0:1.{i/c, i/i}
BasicActionInterface parity_aux_interface(unsigned n);

GscSequence paris0_gsc(unsigned n);
InstructionSequence gen_paris0(unsigned n);  // LLOC 5n-2 (n > 0)
InstructionSequence gen_paris1(unsigned n);  // LLOC 2n+3 (n > 1)

// ---- addition -----------------------------------------------------------

enum class AddVariant { A, A1, A2, A3 };

/// in_a:1..n, in_b:1..n -> out0:1..n+1, least significant bit first;
/// variant A also declares its carry aux0:1.
TaskSpec add_task(unsigned n, AddVariant v = AddVariant::A1);
BasicActionInterface add_interface(unsigned n, AddVariant v);
GscSequence add_gsc(unsigned n, AddVariant v);
InstructionSequence gen_add(unsigned n, AddVariant v);
/// Stated sizes: 14n+3, 14n+1, 14n-5, 8n (A3 is an upper bound).
std::uint64_t add_lloc_formula(unsigned n, AddVariant v);

// ---- Example 1: fan-out on one input bit ---------------------------------

/// in:1 -> out0:1..2k; input 0 sets out0:1..k, input 1 sets out0:k+1..2k.
TaskSpec g_task(unsigned k);
/// With the jump: 2k+4 instructions, largest jump k+2.
InstructionSequence gen_example_g(unsigned k);
/// Jump-free, 2k+2 instructions.
InstructionSequence gen_example_g_short(unsigned k);
/// in:1.{i/i} + out0:l.{1/1} for l = 1..2k
BasicActionInterface g_interface(unsigned k);

// ---- Example 2: fan-out with complemented selector inputs ---------------

enum class EVariant { X, Y };

/// inout:1, inout_a:1..k, inout_b:1..k -> same plus out0_a:1..k, out0_b:1..k.
RegisterLayout e_layout(unsigned k);
/// Defined as the function computed by X^k_E.
TaskSpec e_task(unsigned k);
/// X: 4k+4 instructions, largest jump 2k+2. Y: the printed 5k+4, jump-3
/// form, kept as printed; it does not compute the same function as X.
InstructionSequence gen_example_e(unsigned k, EVariant v);
BasicActionInterface e_interface(unsigned k);

// ---- bounded jumps --------------------------------------------------------

/// One detector block per input assignment; all jumps have size <= 2.
/// LLOC (2n + 2m + 1) 2^n + 1 for n > 0, m + 1 for n = 0.
InstructionSequence gen_bounded_jump(const TaskSpec& f);
std::uint64_t bounded_jump_lloc(unsigned n, unsigned m);

// ---- 1D arrays -----------------------------------------------------------

/// Loops twice over the index bits; PGLB, 6 instructions.
InstructionSequence gen_copy1d();
/// in1D:3 -> out1D0:7 (two cells each).
TaskSpec copy1d_task();

// ---- complementation suite ----------------------------------------------

struct ComplementCase {
  int id = 0;
  BasicActionInterface iface;
  TaskSpec task;
  InstructionSequence program;
  std::size_t claimed_min = 0;
};

/// Cases 1..7: F(x) = 1 - x under seven interfaces.
ComplementCase complement_case(int id);

// ---- repairs ------------------------------------------------------------

struct Repair {
  std::string subject;
  std::string printed;
  std::string emitted;
  std::string reason;
};

const std::vector<Repair>& repair_log();
/// Tab-separated, one repair per line.
std::string render_repair_log();

}  // namespace isq
