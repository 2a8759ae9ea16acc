#include "isq/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "isq/metrics.hpp"
#include "machine.hpp"

namespace isq {

namespace {

constexpr std::size_t kVariantCap = 4096;
constexpr std::size_t kMemoCap = std::size_t{1} << 21;
constexpr int kSlotBits = 3;
constexpr std::size_t kMaxSlots = 64 / kSlotBits;

// Test behaviour of `pol f.y/e`: where control goes depends only on this.
enum class Flow : std::uint8_t { Next, Skip, IfSet, IfClear };

Flow flow_of(Polarity pol, Code yield) {
  if (pol == Polarity::Plain) return Flow::Next;
  const bool pos = pol == Polarity::Pos;
  switch (yield) {
    case Code::One: return pos ? Flow::Next : Flow::Skip;
    case Code::Zero: return pos ? Flow::Skip : Flow::Next;
    case Code::Keep: return pos ? Flow::IfSet : Flow::IfClear;
    case Code::Flip: return pos ? Flow::IfClear : Flow::IfSet;
  }
  return Flow::Next;
}

bool is_test(const Instruction& in) { return in.is_basic() && in.polarity != Polarity::Plain; }

// A basic instruction chosen as representative of its behaviour class, with
// every class member (itself included, sorted).
struct BasicLetter {
  Instruction instr;
  std::vector<Instruction> members;
  int slot = -1;  // search slot, -1 in syntactic enumeration
};

// Groups basics by (focus, target, effect, flow). With `effect_free`, the
// effect is ignored for the foci it names (single-visit non-outputs).
std::vector<BasicLetter> basic_alphabet(const BasicActionInterface& iface, bool naive,
                                        const std::function<bool(const Focus&)>& keep_focus,
                                        const std::function<bool(const Focus&)>& effect_free) {
  std::vector<BasicLetter> out;
  for (const auto& [focus, methods] : iface.entries()) {
    if (!keep_focus(focus)) continue;
    std::map<std::tuple<MethodTarget, int, Flow>, std::vector<Instruction>> classes;
    for (const Method m : methods.methods()) {
      if (!naive && !focus.is_array() && m.target == MethodTarget::IndexBit) continue;  // always an error
      for (const Polarity pol : {Polarity::Plain, Polarity::Pos, Polarity::Neg}) {
        const Instruction in = Instruction::basic(pol, focus, m);
        if (naive) {
          out.push_back(BasicLetter{in, {in}, -1});
          continue;
        }
        const int effect = effect_free(focus) ? -1 : static_cast<int>(m.effect);
        classes[{m.target, effect, flow_of(pol, m.yield)}].push_back(in);
      }
    }
    for (auto& [key, members] : classes) {
      std::sort(members.begin(), members.end());
      out.push_back(BasicLetter{members.front(), members, -1});
    }
  }
  std::sort(out.begin(), out.end(), [](const BasicLetter& a, const BasicLetter& b) { return a.instr < b.instr; });
  return out;
}

std::uint32_t jump_limit(const SearchConstraints& c, std::size_t length) {
  const auto l = static_cast<std::uint32_t>(length);
  return c.max_jump ? std::min(*c.max_jump, l) : l;
}

// The canonical-form rules on position p (1-based) of a length-L sequence,
// shared by enumeration and search. Calls emit(letter) with letter = -1 for
// `!`, -2 - k for #k, -1000 - k for \#k, or a basic index.
struct PositionRules {
  const SearchConstraints* c = nullptr;
  std::size_t length = 0;
  std::uint32_t jmax = 0;
  const std::vector<BasicLetter>* basics = nullptr;
  std::vector<int> basic_focus;  // dense focus id per basic, for single-visit

  template <typename Emit>
  void for_each(std::size_t p, bool prev_test, std::uint64_t used, Emit&& emit) const {
    const bool last = p == length;
    const bool pglb = c->dialect == Dialect::PGLB;
    if (last || !c->only_final_termination) {
      if (!emit(Instruction::term(), -1)) return;
    }
    if (!last) {
      for (std::uint32_t k = 1; k <= jmax && p + k <= length; ++k) {
        if (k == 1 && prev_test) continue;
        if (!emit(Instruction::fwd(k), -2 - static_cast<int>(k))) return;
      }
    }
    if (pglb && !(last && c->only_final_termination)) {
      for (std::uint32_t k = 1; k <= jmax && k < p; ++k) {
        if (!emit(Instruction::bwd(k), -1000 - static_cast<int>(k))) return;
      }
    }
    if (last) return;
    for (std::size_t b = 0; b < basics->size(); ++b) {
      if (c->single_visit && ((used >> basic_focus[b]) & 1U) != 0) continue;
      if (!emit((*basics)[b].instr, static_cast<int>(b))) return;
    }
  }
};

std::vector<int> dense_focus_ids(const std::vector<BasicLetter>& basics) {
  std::map<Focus, int> ids;
  std::vector<int> out;
  for (const auto& b : basics) {
    const auto it = ids.try_emplace(b.instr.focus, static_cast<int>(ids.size())).first;
    out.push_back(it->second);
  }
  if (ids.size() > 64) throw std::invalid_argument("too many foci for the single-visit search");
  return out;
}

// Naive generation: the whole class, filtered by the class predicates only.
void naive_rec(const SearchConstraints& c, std::size_t length, const std::vector<Instruction>& alphabet,
               std::vector<Instruction>& prefix, const std::function<void(InstructionSequence)>& emit) {
  if (prefix.size() == length) {
    InstructionSequence seq(prefix, c.dialect);
    const ClassReport r = classify(seq);
    if (c.single_visit && !r.single_visit) return;
    if (c.only_final_termination && !r.only_final_termination) return;
    emit(std::move(seq));
    return;
  }
  for (const auto& in : alphabet) {
    prefix.push_back(in);
    naive_rec(c, length, alphabet, prefix, emit);
    prefix.pop_back();
  }
}

std::vector<Instruction> naive_alphabet(const SearchConstraints& c, std::size_t length) {
  std::vector<Instruction> a{Instruction::term()};
  const std::uint32_t j = jump_limit(c, length);
  for (std::uint32_t k = 1; k <= j; ++k) a.push_back(Instruction::fwd(k));
  if (c.dialect == Dialect::PGLB) {
    for (std::uint32_t k = 1; k <= j; ++k) a.push_back(Instruction::bwd(k));
  }
  for (const auto& b : basic_alphabet(c.interface, true, [](const Focus&) { return true; },
                                      [](const Focus&) { return false; })) {
    a.push_back(b.instr);
  }
  return a;
}

// ---- the search proper ------------------------------------------------------

struct World {
  std::uint32_t pc = 1;
  bool done = false;
  std::uint32_t steps = 0;
  std::uint64_t state = 0;
};

struct Letter {
  InstrKind kind = InstrKind::Term;
  Polarity pol = Polarity::Plain;
  int slot = -1;
  Method method;
  std::uint32_t jump = 0;
  int id = -1;  // as in PositionRules
};

struct Problem {
  SearchConstraints c;
  TaskSpec task;  // over search_layout
  std::vector<Focus> slots;
  std::vector<KernelKind> kinds;
  std::vector<BasicLetter> basics;
  PositionRules rules;
  std::vector<World> worlds;
  std::vector<Bits> expected;
  std::vector<std::pair<int, bool>> outputs;  // slot, is array
  std::uint64_t step_bound = 0;
};

Bits outputs_of(const Problem& pb, std::uint64_t state) {
  Bits out = 0;
  int off = 0;
  for (const auto& [slot, array] : pb.outputs) {
    const auto s = static_cast<unsigned>((state >> (kSlotBits * slot)) & 7U);
    if (array) {
      out |= static_cast<Bits>((s >> 1) & 3U) << off;
      off += 2;
    } else {
      out |= static_cast<Bits>(s & 1U) << off;
      off += 1;
    }
  }
  return out;
}

Letter letter_for(const Problem& pb, int id) {
  Letter l;
  l.id = id;
  if (id == -1) {
    l.kind = InstrKind::Term;
  } else if (id <= -1000) {
    l.kind = InstrKind::BwdJump;
    l.jump = static_cast<std::uint32_t>(-1000 - id);
  } else if (id < -1) {
    l.kind = InstrKind::FwdJump;
    l.jump = static_cast<std::uint32_t>(-2 - id);
  } else {
    const BasicLetter& b = pb.basics[static_cast<std::size_t>(id)];
    l.kind = InstrKind::Basic;
    l.pol = b.instr.polarity;
    l.slot = b.slot;
    l.method = b.instr.method;
  }
  return l;
}

class ShardSearch {
 public:
  ShardSearch(const Problem& pb, std::size_t length, std::size_t cap)
      : pb_(pb), length_(length), cap_(cap), single_pass_(pb.c.dialect == Dialect::SinglePass) {
    prefix_.resize(length);
  }

  void run(int first_id) {
    std::vector<World> worlds = pb_.worlds;
    place(1, first_id, worlds, 0);
  }

  std::vector<std::vector<int>> witnesses;
  SearchStats stats;

 private:
  // Executes every world parked at or below p; false when one goes wrong.
  bool advance(std::size_t p, std::vector<World>& worlds) {
    for (std::size_t w = 0; w < worlds.size(); ++w) {
      World& x = worlds[w];
      while (!x.done && x.pc <= p) {
        const Letter& l = prefix_[x.pc - 1];
        ++stats.runs;
        if (++x.steps > pb_.step_bound) return false;
        switch (l.kind) {
          case InstrKind::Term:
            if (outputs_of(pb_, x.state) != pb_.expected[w]) return false;
            x.done = true;
            break;
          case InstrKind::FwdJump:
            x.pc += l.jump;
            break;
          case InstrKind::BwdJump:
            x.pc -= l.jump;
            break;
          case InstrKind::Basic: {
            const unsigned shift = static_cast<unsigned>(kSlotBits * l.slot);
            const auto s = static_cast<std::uint8_t>((x.state >> shift) & 7U);
            bool reply = false;
            const std::uint8_t next = apply_bits(pb_.kinds[static_cast<std::size_t>(l.slot)], s, l.method, reply);
            x.state = (x.state & ~(std::uint64_t{7} << shift)) | (std::uint64_t{next} << shift);
            x.pc += (l.pol == Polarity::Plain || (l.pol == Polarity::Pos) == reply) ? 1 : 2;
            break;
          }
        }
        if (!x.done && x.pc > length_) return false;
      }
    }
    return true;
  }

  // Places letter `id` at position p and explores below. True if a witness
  // was found in the subtree.
  bool place(std::size_t p, int id, std::vector<World>& worlds, std::uint64_t used) {
    ++stats.candidates;
    prefix_[p - 1] = letter_for(pb_, id);
    if (!advance(p, worlds)) {
      ++stats.pruned;
      return false;
    }
    if (id >= 0 && pb_.c.single_visit) used |= std::uint64_t{1} << pb_.rules.basic_focus[static_cast<std::size_t>(id)];
    if (p == length_) {
      for (const auto& w : worlds) {
        if (!w.done) return false;
      }
      std::vector<int> ids;
      for (const auto& l : prefix_) ids.push_back(l.id);
      witnesses.push_back(std::move(ids));
      if (witnesses.size() >= cap_) stop_ = true;
      return true;
    }
    const bool test = id >= 0 && prefix_[p - 1].pol != Polarity::Plain;
    return expand(p + 1, worlds, test, used);
  }

  bool expand(std::size_t p, const std::vector<World>& worlds, bool prev_test, std::uint64_t used) {
    std::string key;
    if (single_pass_) {
      key = memo_key(p, worlds, prev_test, used);
      if (failed_.count(key) != 0) {
        ++stats.pruned;
        return false;
      }
    }
    bool reachable = !single_pass_;
    for (const auto& w : worlds) {
      if (!w.done && w.pc == p) reachable = true;
    }
    bool found = false;
    std::vector<World> scratch;
    pb_.rules.for_each(p, prev_test, used, [&](const Instruction&, int id) {
      scratch = worlds;
      if (place(p, id, scratch, used)) found = true;
      // an unreachable position only ever gets the first admissible filler
      return reachable && !stop_;
    });
    if (single_pass_ && !found && !stop_ && failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return found;
  }

  static std::string memo_key(std::size_t p, const std::vector<World>& worlds, bool prev_test, std::uint64_t used) {
    std::string k;
    k.reserve(16 + worlds.size() * 12);
    auto put = [&k](const auto& v) { k.append(reinterpret_cast<const char*>(&v), sizeof v); };
    put(static_cast<std::uint32_t>(p));
    put(used);
    k.push_back(prev_test ? 1 : 0);
    for (const auto& w : worlds) {
      if (w.done) {
        put(std::uint32_t{0});
      } else {
        put(w.pc);
        put(w.state);
      }
    }
    return k;
  }

  const Problem& pb_;
  std::size_t length_;
  std::size_t cap_;
  bool single_pass_;
  bool stop_ = false;
  std::vector<Letter> prefix_;
  std::unordered_set<std::string> failed_;
};

Problem make_problem(const TaskSpec& task, const SearchConstraints& c) {
  Problem pb;
  pb.c = c;
  pb.task = task;
  pb.task.layout = search_layout(task, c.interface);
  const RegisterLayout& layout = pb.task.layout;
  pb.slots = layout.foci();
  if (pb.slots.size() > kMaxSlots) throw std::invalid_argument("too many foci for the search");
  for (const auto& f : pb.slots) pb.kinds.push_back(f.is_array() ? KernelKind::Array1D : KernelKind::Register);
  auto slot_of = [&pb](const Focus& f) {
    return static_cast<int>(std::find(pb.slots.begin(), pb.slots.end(), f) - pb.slots.begin());
  };

  std::vector<Focus> outs = layout.outputs;
  auto is_out = [&outs](const Focus& f) { return std::find(outs.begin(), outs.end(), f) != outs.end(); };
  pb.basics = basic_alphabet(
      c.interface, false, [&](const Focus& f) { return slot_of(f) < static_cast<int>(pb.slots.size()); },
      [&](const Focus& f) { return c.single_visit && !is_out(f); });
  for (auto& b : pb.basics) b.slot = slot_of(b.instr.focus);

  pb.rules.c = &pb.c;
  pb.rules.basics = &pb.basics;
  pb.rules.basic_focus = dense_focus_ids(pb.basics);

  for (const auto& f : layout.outputs) pb.outputs.emplace_back(slot_of(f), f.is_array());

  int state_bits = 0;
  for (const auto k : pb.kinds) state_bits += k == KernelKind::Array1D ? 3 : 1;
  pb.step_bound = std::uint64_t{1} << std::min(state_bits, 24);  // times LLOC, set per length

  const int arb = layout.arbitrary_bits();
  for (const auto& [x, want] : pb.task.table) {
    for (Bits a = 0; a < (Bits{1} << arb); ++a) {
      const ServiceFamily h = initial_family(layout, x, a);
      World w;
      for (std::size_t s = 0; s < pb.slots.size(); ++s) {
        w.state |= std::uint64_t{h.find(pb.slots[s])->state} << (kSlotBits * s);
      }
      pb.worlds.push_back(w);
      pb.expected.push_back(want);
    }
  }
  return pb;
}

std::vector<InstructionSequence> expand_variants(const Problem& pb, const std::vector<int>& ids, Dialect d) {
  std::vector<std::vector<Instruction>> options;
  for (const int id : ids) {
    if (id >= 0) {
      options.push_back(pb.basics[static_cast<std::size_t>(id)].members);
    } else {
      const Letter l = letter_for(pb, id);
      Instruction in = l.kind == InstrKind::Term      ? Instruction::term()
                       : l.kind == InstrKind::FwdJump ? Instruction::fwd(l.jump)
                                                      : Instruction::bwd(l.jump);
      options.push_back({in});
    }
  }
  std::vector<InstructionSequence> out;
  std::vector<std::size_t> pick(options.size(), 0);
  for (;;) {
    std::vector<Instruction> seq;
    for (std::size_t i = 0; i < options.size(); ++i) seq.push_back(options[i][pick[i]]);
    out.emplace_back(std::move(seq), d);
    if (out.size() >= kVariantCap) break;
    std::size_t i = options.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (options.empty()) break;
  }
  return out;
}

void check_witness(const InstructionSequence& w, const TaskSpec& task, const SearchConstraints& c) {
  const ClassReport r = classify(w);
  const bool ok = computes(w, task).ok && required_interface(w).subinterface_of(c.interface) &&
                  (c.dialect == Dialect::PGLB || r.single_pass) && (!c.max_jump || r.max_jump <= *c.max_jump) &&
                  (!c.single_visit || r.single_visit) && (!c.only_final_termination || r.only_final_termination);
  if (!ok) throw std::logic_error("search produced an invalid witness: " + render(w));
}

bool seq_less(const InstructionSequence& a, const InstructionSequence& b) { return a.instrs() < b.instrs(); }

void finish_witnesses(SearchResult& r, std::vector<InstructionSequence> all, const TaskSpec& task,
                      const SearchConstraints& c) {
  std::sort(all.begin(), all.end(), seq_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > c.max_witnesses) all.erase(all.begin() + static_cast<std::ptrdiff_t>(c.max_witnesses), all.end());
  for (const auto& w : all) check_witness(w, task, c);
  r.witnesses = std::move(all);
}

}  // namespace

void SearchConstraints::validate() const {
  if (max_lloc == 0) throw std::invalid_argument("max LLOC must be at least 1");
  if (max_jump && *max_jump > max_lloc) throw std::invalid_argument("max jump exceeds max LLOC");
  if (max_witnesses == 0) throw std::invalid_argument("max witnesses must be at least 1");
}

std::string SearchConstraints::str() const {
  std::string s = "interface=" + interface.str();
  s += dialect == Dialect::PGLB ? " dialect=pglb" : " dialect=single-pass";
  s += " max_lloc=" + std::to_string(max_lloc);
  s += " max_jump=" + (max_jump ? std::to_string(*max_jump) : std::string("none"));
  s += single_visit ? " single_visit=yes" : " single_visit=no";
  s += only_final_termination ? " final_term_only=yes" : " final_term_only=no";
  return s;
}

RegisterLayout search_layout(const TaskSpec& task, const BasicActionInterface& iface) {
  RegisterLayout l = task.layout;
  const std::vector<Focus> have = l.foci();
  for (const auto& [f, m] : iface.entries()) {
    if (std::find(have.begin(), have.end(), f) != have.end()) continue;
    switch (f.header) {
      case RoleHeader::Out0:
      case RoleHeader::Out1:
      case RoleHeader::Aux0:
      case RoleHeader::Aux1:
        l.auxiliaries.push_back(f);
        break;
      default:
        break;  // would need an input value or arbitrary start; left unbound
    }
  }
  return l;
}

std::vector<InstructionSequence> enumerate(const SearchConstraints& c, std::size_t length, bool naive) {
  c.validate();
  if (length == 0 || length > c.max_lloc) throw std::invalid_argument("length must be in 1..max LLOC");
  std::vector<InstructionSequence> out;
  if (naive) {
    std::vector<Instruction> prefix;
    naive_rec(c, length, naive_alphabet(c, length), prefix, [&out](InstructionSequence s) { out.push_back(std::move(s)); });
    return out;
  }
  const std::vector<BasicLetter> basics =
      basic_alphabet(c.interface, false, [](const Focus&) { return true; }, [](const Focus&) { return false; });
  PositionRules rules{&c, length, jump_limit(c, length), &basics, dense_focus_ids(basics)};
  std::vector<Instruction> prefix;
  std::function<void(bool, std::uint64_t)> rec = [&](bool prev_test, std::uint64_t used) {
    const std::size_t p = prefix.size() + 1;
    rules.for_each(p, prev_test, used, [&](const Instruction& in, int id) {
      prefix.push_back(in);
      if (p == length) {
        out.emplace_back(prefix, c.dialect);
      } else {
        const std::uint64_t u = id >= 0 ? used | (std::uint64_t{1} << rules.basic_focus[static_cast<std::size_t>(id)]) : used;
        rec(is_test(in), u);
      }
      prefix.pop_back();
      return true;
    });
  };
  rec(false, 0);
  return out;
}

SearchResult min_lloc(const TaskSpec& task, const SearchConstraints& c) {
  c.validate();
  Problem pb = make_problem(task, c);
  const std::uint64_t per_length_bound = pb.step_bound;
  SearchResult result;
  for (std::size_t length = 1; length <= c.max_lloc; ++length) {
    result.bound = length;
    pb.rules.length = length;
    pb.rules.jmax = jump_limit(c, length);
    pb.step_bound = per_length_bound * length;

    std::vector<int> shards;
    pb.rules.for_each(1, false, 0, [&](const Instruction&, int id) {
      shards.push_back(id);
      return true;
    });
    std::vector<std::vector<std::vector<int>>> found(shards.size());
    std::vector<SearchStats> stats(shards.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t s = next++; s < shards.size(); s = next++) {
        ShardSearch search(pb, length, c.max_witnesses);
        search.run(shards[s]);
        found[s] = std::move(search.witnesses);
        stats[s] = search.stats;
      }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(c.jobs, static_cast<unsigned>(shards.size())));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    std::vector<std::vector<int>> canonical;
    for (std::size_t s = 0; s < shards.size(); ++s) {
      result.stats.candidates += stats[s].candidates;
      result.stats.pruned += stats[s].pruned;
      result.stats.runs += stats[s].runs;
      for (auto& w : found[s]) {
        if (canonical.size() < c.max_witnesses) canonical.push_back(std::move(w));
      }
    }
    if (!canonical.empty()) {
      result.status = SearchStatus::Found;
      result.min_lloc = length;
      result.canonical_witnesses = canonical.size();
      std::vector<InstructionSequence> all;
      for (const auto& ids : canonical) {
        auto v = expand_variants(pb, ids, c.dialect);
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
      }
      finish_witnesses(result, std::move(all), pb.task, c);
      return result;
    }
  }
  return result;
}

SearchResult min_lloc_naive(const TaskSpec& task, const SearchConstraints& c) {
  c.validate();
  TaskSpec t = task;
  t.layout = search_layout(task, c.interface);
  SearchResult result;
  for (std::size_t length = 1; length <= c.max_lloc; ++length) {
    result.bound = length;
    std::vector<InstructionSequence> hits;
    std::vector<Instruction> prefix;
    naive_rec(c, length, naive_alphabet(c, length), prefix, [&](InstructionSequence seq) {
      ++result.stats.candidates;
      if (computes(seq, t).ok) hits.push_back(std::move(seq));
    });
    if (!hits.empty()) {
      result.status = SearchStatus::Found;
      result.min_lloc = length;
      result.canonical_witnesses = std::min(hits.size(), c.max_witnesses);
      finish_witnesses(result, std::move(hits), t, c);
      return result;
    }
  }
  return result;
}

bool verify_lower_bound(const TaskSpec& task, SearchConstraints c, std::size_t bound) {
  c.max_lloc = bound;
  if (c.max_jump && *c.max_jump > bound) c.max_jump = static_cast<std::uint32_t>(bound);
  return !min_lloc(task, c).found();
}

std::string search_report(const SearchResult& r, const SearchConstraints& c, bool machine) {
  std::string out;
  if (machine) {
    out += "constraints\t" + c.str() + "\n";
    out += std::string("status\t") + (r.found() ? "found" : "none") + "\n";
    if (r.found()) out += "min_lloc\t" + std::to_string(r.min_lloc) + "\n";
    out += "bound\t" + std::to_string(r.bound) + "\n";
    out += "candidates\t" + std::to_string(r.stats.candidates) + "\n";
    out += "pruned\t" + std::to_string(r.stats.pruned) + "\n";
    out += "runs\t" + std::to_string(r.stats.runs) + "\n";
    for (const auto& w : r.witnesses) out += "witness\t" + render(w) + "\n";
    return out;
  }
  out += "constraints: " + c.str() + "\n";
  if (r.found()) {
    out += "min LLOC = " + std::to_string(r.min_lloc) + ", " + std::to_string(r.witnesses.size()) +
           (r.witnesses.size() == 1 ? " witness shown\n" : " witnesses shown\n");
    for (const auto& w : r.witnesses) out += "  " + render(w) + "\n";
  } else {
    out += "no program with LLOC <= " + std::to_string(r.bound) + " (" + std::to_string(r.stats.candidates) +
           " candidates)\n";
  }
  out += "candidates " + std::to_string(r.stats.candidates) + ", pruned " + std::to_string(r.stats.pruned) +
         ", runs " + std::to_string(r.stats.runs) + "\n";
  out += "exhaustive and seed-free: the same input gives the same report for any --jobs\n";
  return out;
}

}  // namespace isq
