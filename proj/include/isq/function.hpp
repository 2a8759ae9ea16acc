// From instruction sequences to the partial Boolean functions they compute.
//
// Bit vectors are packed into integers: input bit j (0-based, layout order)
// is bit j of the mask. A scalar focus contributes one bit, a 1D array two
// (cell 0, then cell 1). In text, the first character is bit 0.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isq/interface.hpp"
#include "isq/service.hpp"
#include "isq/syntax.hpp"

namespace isq {

using Bits = std::uint64_t;

std::string bits_str(Bits bits, int width);
Bits parse_bits(std::string_view text);

/// Which foci carry inputs, outputs and scratch state.
///
/// in/inout foci are set from the input vector, out0/out1/aux0/aux1 from
/// their role digit, and role `out` outputs range over both values
/// (arbitrary initialisation). An inout focus may be both input and output.
struct RegisterLayout {
  std::vector<Focus> inputs;
  std::vector<Focus> outputs;
  std::vector<Focus> auxiliaries;

  /// Throws std::invalid_argument on role misuse or duplicates.
  void validate() const;

  [[nodiscard]] int input_bits() const;
  [[nodiscard]] int output_bits() const;
  [[nodiscard]] std::vector<Focus> arbitrary() const;
  [[nodiscard]] int arbitrary_bits() const;
  /// Every declared focus once.
  [[nodiscard]] std::vector<Focus> foci() const;
  /// Foci with M16 (registers) or all methods (arrays).
  [[nodiscard]] BasicActionInterface interface() const;

  bool operator==(const RegisterLayout&) const = default;
};

/// Parses a whitespace-separated focus list.
std::vector<Focus> parse_focus_list(std::string_view text);

struct TaskSpec {
  RegisterLayout layout;
  std::map<Bits, Bits> table;  // missing inputs are don't-care

  [[nodiscard]] bool total() const { return table.size() == (std::size_t{1} << layout.input_bits()); }
};

/// Builds a total task from an oracle.
TaskSpec make_task(RegisterLayout layout, const std::function<Bits(Bits)>& f);

/// Task file: `inputs: in:1 in:2`, `outputs: out0:1`, optional `aux: ...`,
/// then lines `10 -> 1` (`-` for an empty vector); `#` starts a comment.
TaskSpec parse_task(std::string_view text);
std::string render_task(const TaskSpec& task);

ServiceFamily initial_family(const RegisterLayout& layout, Bits input, Bits arbitrary = 0);

enum class EntryKind : std::uint8_t { Value, Diverged, Error, Inconsistent };

struct TableEntry {
  EntryKind kind = EntryKind::Value;
  Bits value = 0;
  bool operator==(const TableEntry&) const = default;
};

struct FunctionTable {
  int input_bits = 0;
  int output_bits = 0;
  std::vector<TableEntry> entries;  // indexed by input mask

  [[nodiscard]] bool total() const;
  /// One `in -> out` line per input; undefined entries print as
  /// `diverged`, `error` or `inconsistent`.
  [[nodiscard]] std::string str() const;
  bool operator==(const FunctionTable&) const = default;
};

class InterfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs every input under every arbitrary initialisation. With `strict`,
/// a required interface outside the layout's interface throws
/// InterfaceError before anything runs.
FunctionTable extract_function(const InstructionSequence& seq, const RegisterLayout& layout, bool strict = true);

struct CheckResult {
  bool ok = true;
  Bits input = 0;      // first failing input
  Bits arbitrary = 0;  // and initialisation
  std::string detail;
};

CheckResult computes(const InstructionSequence& seq, const TaskSpec& task);

bool equivalent(const InstructionSequence& a, const InstructionSequence& b, const RegisterLayout& layout);

struct NosProfile {
  std::optional<std::uint64_t> worst;  // nullopt: some run does not terminate
  std::uint64_t total = 0;             // sum of per-input worst cases
  std::uint64_t inputs = 0;

  /// `worst=6 mean=11/2`
  [[nodiscard]] std::string str() const;
};

NosProfile nos_profile(const InstructionSequence& seq, const RegisterLayout& layout);

/// Per input (and initialisation) step count, nullopt when not terminating.
/// Indexed by input * 2^arbitrary_bits + arbitrary.
std::vector<std::optional<std::uint64_t>> nos_vector(const InstructionSequence& seq, const RegisterLayout& layout);

}  // namespace isq
