// Exhaustive minimal-LLOC search over an interface-constrained program class.
//
// Instruction order used for enumeration and witness tie-breaking is the
// defaulted order of isq::Instruction: ! < #1 < #2 < ... < \#1 < ... <
// basics, basics by (polarity plain < + < -, focus, method).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isq/function.hpp"
#include "isq/interface.hpp"
#include "isq/syntax.hpp"

namespace isq {

struct SearchConstraints {
  BasicActionInterface interface;  // candidates use only these basic actions
  Dialect dialect = Dialect::SinglePass;
  std::size_t max_lloc = 1;
  std::optional<std::uint32_t> max_jump;
  bool single_visit = false;
  bool only_final_termination = false;
  unsigned jobs = 1;
  std::size_t max_witnesses = 16;

  /// Throws std::invalid_argument when max_lloc is 0 or max_jump > max_lloc.
  void validate() const;
  /// One-line echo, without jobs (results do not depend on it).
  [[nodiscard]] std::string str() const;
};

struct SearchStats {
  std::uint64_t candidates = 0;  // instructions placed at some position
  std::uint64_t pruned = 0;      // placements and prefixes cut before full length
  std::uint64_t runs = 0;        // instructions executed across all input worlds

  bool operator==(const SearchStats&) const = default;
};

enum class SearchStatus : std::uint8_t { Found, NoneUpToBound };

struct SearchResult {
  SearchStatus status = SearchStatus::NoneUpToBound;
  std::size_t min_lloc = 0;  // Found only
  std::size_t bound = 0;     // largest LLOC examined
  std::vector<InstructionSequence> witnesses;  // sorted, at most max_witnesses
  std::size_t canonical_witnesses = 0;         // before variant expansion, capped
  SearchStats stats;

  [[nodiscard]] bool found() const noexcept { return status == SearchStatus::Found; }
};

/// Every sequence of exactly `length` instructions in the class, in the
/// documented order. With `naive`, no canonical-form pruning happens;
/// otherwise equivalent tests collapse to one representative, the last
/// instruction is `!` (or a backward jump), jumps stay in range and a test
/// is never followed by #1.
std::vector<InstructionSequence> enumerate(const SearchConstraints& c, std::size_t length, bool naive = false);

/// Iterative deepening from LLOC 1 to c.max_lloc. Deterministic for any
/// c.jobs. Throws std::logic_error if a witness fails re-verification.
SearchResult min_lloc(const TaskSpec& task, const SearchConstraints& c);

/// Same class, checked by running every naive candidate. Only for tiny
/// alphabets; used to cross-validate min_lloc.
SearchResult min_lloc_naive(const TaskSpec& task, const SearchConstraints& c);

/// True iff nothing in the class with LLOC <= bound computes the task.
bool verify_lower_bound(const TaskSpec& task, SearchConstraints c, std::size_t bound);

/// The layout the search runs against: the task's, plus interface foci with
/// constant roles (out0, out1, aux0, aux1) as auxiliaries.
RegisterLayout search_layout(const TaskSpec& task, const BasicActionInterface& iface);

/// Human summary (`min LLOC = 5, 1 witness shown`) or, with `machine`,
/// tab-separated `key\tvalue` lines that are stable across runs and --jobs.
std::string search_report(const SearchResult& r, const SearchConstraints& c, bool machine);

}  // namespace isq
