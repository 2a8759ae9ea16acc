// Basic action interfaces: finite maps focus -> method set.
//
// Used both as the required interface of a program and as the provided
// interface of a service family.

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "isq/syntax.hpp"

namespace isq {

class BasicActionInterface {
 public:
  BasicActionInterface() = default;

  /// Pointwise union: g.V + g.W = g.(V u W). Adding an empty set still
  /// records the focus (g.{} is a distinct entry).
  BasicActionInterface& add(const Focus& focus, MethodSet methods);
  BasicActionInterface& add(const Focus& focus, Method method) { return add(focus, MethodSet{method}); }

  [[nodiscard]] MethodSet methods_of(const Focus& focus) const;
  [[nodiscard]] bool contains(const Focus& focus, Method method) const {
    return methods_of(focus).contains(method);
  }
  [[nodiscard]] const std::map<Focus, MethodSet>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

  /// Pointwise containment; absent foci count as empty.
  [[nodiscard]] bool subinterface_of(const BasicActionInterface& other) const;

  /// `in:1.{i/i} + out:1.{i/c}`
  [[nodiscard]] std::string str() const;

  BasicActionInterface operator+(const BasicActionInterface& other) const;
  bool operator==(const BasicActionInterface&) const = default;

 private:
  std::map<Focus, MethodSet> entries_;
};

inline bool subinterface(const BasicActionInterface& i, const BasicActionInterface& j) {
  return i.subinterface_of(j);
}

/// Accepts the file form (one `focus: m1 m2 ...` per line, `M16` and `A16`
/// keywords for all direct / all index-bit methods, `#` comments) and the
/// inline form `in:1.{i/i} + out:1.{i/c,i/0}`.
BasicActionInterface parse_interface(std::string_view text);

/// File form, one focus per line.
std::string render_interface_file(const BasicActionInterface& iface);

}  // namespace isq
