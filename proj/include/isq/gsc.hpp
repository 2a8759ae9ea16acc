// Generalised semi-colon sequences: `;_{k=1}^{n} (X_k)` with bodies whose
// focus indices and jump counters are affine in the loop variable.
//
// Text form (one loop variable per block, blocks do not nest):
//
//   +in:1.i/i; rep l=2..4 { #4; +in:l.i/i; #3; #3; -in:l.i/i }; out0:1.1/1; !
//
// A block `rep v=A..B` with A > 1 is stored shifted so that the loop runs
// over 1..(B-A+1).

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isq/syntax.hpp"

namespace isq {

/// coef * k + offset
struct Affine {
  std::int64_t coef = 0;
  std::int64_t offset = 0;

  [[nodiscard]] constexpr std::int64_t eval(std::int64_t k) const noexcept { return coef * k + offset; }
  [[nodiscard]] std::string str(std::string_view var) const;
  bool operator==(const Affine&) const = default;
};

/// An instruction whose focus index / jump counter may depend on the loop variable.
struct TemplateInstruction {
  Instruction shape;  // index and jump fields ignored; taken from the affine parts
  Affine index;
  Affine jump;

  static TemplateInstruction constant(const Instruction& in);
  /// Throws std::invalid_argument when the instance is ill-formed (negative
  /// jump counter, non-positive focus index).
  [[nodiscard]] Instruction instantiate(std::int64_t k) const;
  [[nodiscard]] std::string str(std::string_view var) const;
  bool operator==(const TemplateInstruction&) const = default;
};

struct Repeat {
  std::uint32_t count = 1;
  std::vector<TemplateInstruction> body;
  std::string var = "k";
  bool operator==(const Repeat&) const = default;
};

using GscSegment = std::variant<std::vector<Instruction>, Repeat>;

class GscSequence {
 public:
  GscSequence() = default;
  explicit GscSequence(std::vector<GscSegment> segments);

  GscSequence& plain(std::vector<Instruction> instrs);
  GscSequence& plain(std::string_view program);
  GscSequence& repeat(Repeat r);

  [[nodiscard]] const std::vector<GscSegment>& segments() const noexcept { return segments_; }
  [[nodiscard]] std::string str() const;
  bool operator==(const GscSequence&) const = default;

 private:
  std::vector<GscSegment> segments_;
};

/// Parses a template body such as `#4; +in:l.i/i; -out0:(k+1).1/1`.
Repeat make_repeat(std::uint32_t count, std::string var, std::string_view body, std::int64_t first = 1);

GscSequence parse_gsc(std::string_view text);

/// Instantiates every block; throws std::invalid_argument on ill-formed instances.
InstructionSequence expand_gsc(const GscSequence& g, Dialect dialect = Dialect::SinglePass);

/// Non-expanding size: plain parts count their instructions, a block of n
/// iterations counts LLOC(body) + 2 + floor(log2 n).
std::size_t lloc_gsc(const GscSequence& g);

}  // namespace isq
