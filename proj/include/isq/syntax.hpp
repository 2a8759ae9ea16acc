// Instruction-sequence syntax: foci, methods, instructions and sequences.
//
// A program is a non-empty list of instructions. Positions are 1-based
// everywhere in this library (position 1 is the first instruction).

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isq {

enum class FocusKind : std::uint8_t { Scalar, Array1D };

/// Role header of a focus. Out0/Out1/Aux0/Aux1 carry their initial value.
enum class RoleHeader : std::uint8_t { In, InOut, Out, Out0, Out1, Aux0, Aux1 };

/// Name of a service in a family, e.g. `in:3`, `out0_a:2`, `in1D:3`.
struct Focus {
  FocusKind kind = FocusKind::Scalar;
  RoleHeader header = RoleHeader::In;
  std::string base;  // "" or e.g. "_a"
  std::uint32_t index = 1;

  static Focus scalar(RoleHeader header, std::uint32_t index, std::string base = {});
  static Focus array(RoleHeader header, std::uint32_t index, std::string base = {});

  [[nodiscard]] std::string str() const;
  [[nodiscard]] bool is_array() const noexcept { return kind == FocusKind::Array1D; }

  auto operator<=>(const Focus&) const = default;
  bool operator==(const Focus&) const = default;
};

/// Yield / effect code of a register method, ordered 0 < 1 < i < c.
enum class Code : std::uint8_t { Zero, One, Keep, Flip };

enum class MethodTarget : std::uint8_t { Direct, IndexBit };

/// A method `y/e`, or `a1:y/e` when it targets the index bit of a 1D array.
struct Method {
  MethodTarget target = MethodTarget::Direct;
  Code yield = Code::Keep;
  Code effect = Code::Keep;

  /// Dense id in 0..31; direct methods occupy 0..15 in (yield, effect) order.
  [[nodiscard]] constexpr unsigned id() const noexcept {
    return (target == MethodTarget::IndexBit ? 16U : 0U) + 4U * static_cast<unsigned>(yield) +
           static_cast<unsigned>(effect);
  }
  static constexpr Method from_id(unsigned id) noexcept {
    return Method{id >= 16 ? MethodTarget::IndexBit : MethodTarget::Direct,
                  static_cast<Code>((id % 16) / 4), static_cast<Code>(id % 4)};
  }
  [[nodiscard]] std::string str() const;

  auto operator<=>(const Method&) const = default;
  bool operator==(const Method&) const = default;
};

/// Evaluates a yield/effect code against the current bit.
constexpr bool eval_code(Code code, bool current) noexcept {
  switch (code) {
    case Code::Zero: return false;
    case Code::One: return true;
    case Code::Keep: return current;
    case Code::Flip: return !current;
  }
  return false;
}

/// Subset of the 32 methods (16 direct + 16 index-bit), stored as a bitmask.
class MethodSet {
 public:
  constexpr MethodSet() = default;
  constexpr explicit MethodSet(std::uint32_t bits) : bits_(bits) {}
  MethodSet(std::initializer_list<Method> methods) {
    for (const auto& m : methods) insert(m);
  }

  static constexpr MethodSet m16() { return MethodSet(0x0000FFFFU); }
  static constexpr MethodSet index_methods() { return MethodSet(0xFFFF0000U); }
  static constexpr MethodSet all() { return MethodSet(0xFFFFFFFFU); }

  [[nodiscard]] constexpr bool contains(Method m) const noexcept { return (bits_ >> m.id()) & 1U; }
  constexpr void insert(Method m) noexcept { bits_ |= 1U << m.id(); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr std::uint32_t bits() const noexcept { return bits_; }
  [[nodiscard]] int size() const noexcept { return __builtin_popcount(bits_); }
  [[nodiscard]] constexpr bool subset_of(MethodSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] std::vector<Method> methods() const;
  [[nodiscard]] std::string str() const;

  constexpr MethodSet operator|(MethodSet o) const noexcept { return MethodSet(bits_ | o.bits_); }
  constexpr MethodSet operator&(MethodSet o) const noexcept { return MethodSet(bits_ & o.bits_); }
  constexpr MethodSet& operator|=(MethodSet o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  bool operator==(const MethodSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class InstrKind : std::uint8_t { Term, FwdJump, BwdJump, Basic };
enum class Polarity : std::uint8_t { Plain, Pos, Neg };

/// One instruction: `!`, `#k`, `\#k`, `f.m`, `+f.m` or `-f.m`.
///
/// The defaulted ordering is the documented total order used for
/// enumeration and witness tie-breaking: Term < FwdJump(1) < ... <
/// BwdJump(1) < ... < Basic, basics ordered by (polarity, focus, method).
struct Instruction {
  InstrKind kind = InstrKind::Term;
  std::uint32_t jump = 0;
  Polarity polarity = Polarity::Plain;
  Focus focus;
  Method method;

  static Instruction term() { return Instruction{}; }
  static Instruction fwd(std::uint32_t k) { return Instruction{InstrKind::FwdJump, k, {}, {}, {}}; }
  static Instruction bwd(std::uint32_t k) { return Instruction{InstrKind::BwdJump, k, {}, {}, {}}; }
  static Instruction basic(Polarity pol, Focus focus, Method method) {
    return Instruction{InstrKind::Basic, 0, pol, std::move(focus), method};
  }

  [[nodiscard]] bool is_basic() const noexcept { return kind == InstrKind::Basic; }
  [[nodiscard]] bool is_jump() const noexcept {
    return kind == InstrKind::FwdJump || kind == InstrKind::BwdJump;
  }
  [[nodiscard]] std::string str() const;

  auto operator<=>(const Instruction&) const = default;
  bool operator==(const Instruction&) const = default;
};

enum class Dialect : std::uint8_t { SinglePass, PGLB };

/// Non-empty instruction list tagged with its dialect.
class InstructionSequence {
 public:
  /// Throws std::invalid_argument when empty, or when a SinglePass sequence
  /// contains a backward jump.
  InstructionSequence(std::vector<Instruction> instrs, Dialect dialect);
  /// Picks PGLB if a backward jump is present, SinglePass otherwise.
  explicit InstructionSequence(std::vector<Instruction> instrs);

  [[nodiscard]] const std::vector<Instruction>& instrs() const noexcept { return instrs_; }
  [[nodiscard]] Dialect dialect() const noexcept { return dialect_; }
  [[nodiscard]] std::size_t size() const noexcept { return instrs_.size(); }
  /// 1-based access.
  [[nodiscard]] const Instruction& at(std::size_t pos) const { return instrs_.at(pos - 1); }

  [[nodiscard]] std::string str() const;

  bool operator==(const InstructionSequence&) const = default;

 private:
  std::vector<Instruction> instrs_;
  Dialect dialect_;
};

/// Concatenation X;Y. The result is PGLB when either operand is.
InstructionSequence concat(const InstructionSequence& x, const InstructionSequence& y);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

Focus parse_focus(std::string_view text);
Method parse_method(std::string_view text);
Instruction parse_instruction(std::string_view text);

/// Parses `instr (';' instr)*`. Whitespace between tokens is ignored.
InstructionSequence parse(std::string_view text, Dialect dialect = Dialect::PGLB);

/// Canonical text; backward jumps are spelled `\#k`.
std::string render(const InstructionSequence& seq);

/// Strips `//` line comments (program files).
std::string strip_comments(std::string_view text);

/// Header text as written in a focus, e.g. "out0", "in1D", "aux1D1".
std::string role_text(FocusKind kind, RoleHeader header);

}  // namespace isq
