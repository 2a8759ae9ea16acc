// Service kernels (single-bit registers and two-cell 1D arrays) and service
// families, the state an instruction sequence acts on.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "isq/interface.hpp"
#include "isq/syntax.hpp"

namespace isq {

enum class KernelKind : std::uint8_t { Register, Array1D };

/// A register `br(b)` or a 1D array `arr(i=.., c0=.., c1=..)`, each with a
/// method interface. The inactive kernel (`br(*)`, degenerate array) admits
/// no methods.
struct Kernel {
  KernelKind kind = KernelKind::Register;
  bool inactive = false;
  // register: bit 0 is the content; array: bit 0 index, bit 1 cell 0, bit 2 cell 1
  std::uint8_t state = 0;
  MethodSet methods;

  static Kernel reg(bool content);
  static Kernel array(bool index, bool cell0, bool cell1);
  static Kernel inactive_of(KernelKind kind);

  [[nodiscard]] bool content() const noexcept { return (state & 1U) != 0; }
  [[nodiscard]] bool index_bit() const noexcept { return (state & 1U) != 0; }
  [[nodiscard]] bool cell(int i) const noexcept { return ((state >> (1 + i)) & 1U) != 0; }

  /// `br(0)`, `br(*)`, `arr(i=0,c0=1,c1=0)`; a non-default interface is
  /// appended as `{i/i,1/1}`.
  [[nodiscard]] std::string str() const;

  bool operator==(const Kernel&) const = default;
};

struct ApplyResult {
  bool reply = false;
  Kernel next;
};

/// Transition on raw state bits, no interface check. Used by the engines.
constexpr std::uint8_t apply_bits(KernelKind kind, std::uint8_t state, Method m, bool& reply) noexcept {
  if (kind == KernelKind::Register) {
    const bool s = (state & 1U) != 0;
    reply = eval_code(m.yield, s);
    return eval_code(m.effect, s) ? 1 : 0;
  }
  if (m.target == MethodTarget::IndexBit) {
    const bool s = (state & 1U) != 0;
    reply = eval_code(m.yield, s);
    return static_cast<std::uint8_t>((state & 0b110U) | (eval_code(m.effect, s) ? 1U : 0U));
  }
  const unsigned shift = 1U + (state & 1U);
  const bool s = ((state >> shift) & 1U) != 0;
  reply = eval_code(m.yield, s);
  const std::uint8_t cleared = static_cast<std::uint8_t>(state & ~(1U << shift));
  return static_cast<std::uint8_t>(cleared | ((eval_code(m.effect, s) ? 1U : 0U) << shift));
}

/// Reply and successor kernel, or nullopt when the method is outside the
/// kernel's interface or the kernel is inactive.
std::optional<ApplyResult> apply_method(const Kernel& kernel, Method m);

/// Sets the admitted method set to exactly `j`; an empty set yields the
/// inactive kernel.
Kernel restrict_methods(MethodSet j, const Kernel& kernel);

/// Finite map focus -> kernel.
class ServiceFamily {
 public:
  ServiceFamily() = default;

  static ServiceFamily single(const Focus& focus, const Kernel& kernel);

  [[nodiscard]] const std::map<Focus, Kernel>& bindings() const noexcept { return bindings_; }
  [[nodiscard]] const Kernel* find(const Focus& focus) const;
  [[nodiscard]] bool empty() const noexcept { return bindings_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return bindings_.size(); }

  /// Rebinds without collision semantics (engine use).
  void set(const Focus& focus, const Kernel& kernel) { bindings_[focus] = kernel; }

  /// `f.br(0) (+) g.br(1)`, or `{}` when empty.
  [[nodiscard]] std::string str() const;

  bool operator==(const ServiceFamily&) const = default;

 private:
  std::map<Focus, Kernel> bindings_;
};

/// H (+) K. A focus bound on both sides gets the inactive kernel.
ServiceFamily compose(const ServiceFamily& h, const ServiceFamily& k);
inline ServiceFamily operator+(const ServiceFamily& h, const ServiceFamily& k) { return compose(h, k); }

/// Removes the bindings of the given foci.
ServiceFamily restrict(const std::set<Focus>& v, const ServiceFamily& h);

BasicActionInterface provided_interface(const ServiceFamily& h);

/// One binding per line: `in:1=br(0)`, `in1D:3=arr(i=0,c0=1,c1=0)`,
/// optional method list `out:1=br(1){i/c}`. Repeated foci compose.
ServiceFamily parse_family(std::string_view text);
std::string render_family_file(const ServiceFamily& h);

}  // namespace isq
