#include "isq/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace isq {

ClassReport classify(const InstructionSequence& seq) {
  ClassReport r;
  std::map<Focus, int> visits;
  // role = everything except the numeric index
  std::map<std::tuple<FocusKind, RoleHeader, std::string>, std::set<std::uint32_t>> indices;
  const auto& ins = seq.instrs();
  for (std::size_t p = 0; p < ins.size(); ++p) {
    const Instruction& in = ins[p];
    switch (in.kind) {
      case InstrKind::Term:
        if (p + 1 != ins.size()) r.only_final_termination = false;
        break;
      case InstrKind::BwdJump:
        r.single_pass = false;
        [[fallthrough]];
      case InstrKind::FwdJump:
        r.max_jump = std::max(r.max_jump, in.jump);
        break;
      case InstrKind::Basic:
        if (++visits[in.focus] > 1) r.single_visit = false;
        indices[{in.focus.kind, in.focus.header, in.focus.base}].insert(in.focus.index);
        break;
    }
  }
  if (ins.back().kind != InstrKind::Term) r.only_final_termination = false;
  for (const auto& [role, set] : indices) {
    // a set of positive integers is {1..k} iff its maximum equals its size
    if (*set.rbegin() != set.size()) r.low_register_indices = false;
  }
  return r;
}

std::string ClassReport::str() const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  return std::string("single_pass=") + yn(single_pass) + " max_jump=" + std::to_string(max_jump) +
         " single_visit=" + yn(single_visit) + " only_final_term=" + yn(only_final_termination) +
         " low_indices=" + yn(low_register_indices);
}

BasicActionInterface required_interface(const InstructionSequence& seq) {
  BasicActionInterface out;
  for (const auto& in : seq.instrs()) {
    if (in.is_basic()) out.add(in.focus, in.method);
  }
  return out;
}

}  // namespace isq
