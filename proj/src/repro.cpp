#include "isq/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "isq/exec.hpp"
#include "isq/function.hpp"
#include "isq/generators.hpp"
#include "isq/metrics.hpp"
#include "isq/search.hpp"
#include "isq/service.hpp"
#include "isq/unfold.hpp"

namespace isq {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void claim(Bundle& b, std::string name, bool pass, std::string detail = {}) {
  b.claims.push_back(SubClaim{std::move(name), pass, std::move(detail)});
}

template <typename T>
std::string got_want(const T& got, const T& want) {
  std::ostringstream s;
  s << "got " << got << ", want " << want;
  return s.str();
}

// ---- 1: NOS table -------------------------------------------------------------

void nos_table(Bundle& b, const ReproOptions&) {
  struct Row {
    const char* program;
    const char* family;
    std::optional<std::uint64_t> want;
  };
  const Row rows[] = {
      {"!", "", 1},
      {"#1;#1;!", "", 3},
      {"#1;#0;!;!", "", std::nullopt},
      {"+out0:1.1/1;!", "out0:1=br(1)", 2},
      {"+out0:1.1/1;\\#2;!", "out0:1=br(1)", 2},
      {"#2;!", "", std::nullopt},
      {"+in:3.i/i;!", "out0:1=br(0)", std::nullopt},
  };
  for (const auto& r : rows) {
    const auto got = nos(parse(r.program), parse_family(r.family));
    const std::string h = *r.family ? r.family : "H";
    claim(b, std::string("NOS(") + r.program + ", " + h + ") = " + nos_str(r.want), got == r.want,
          "got " + nos_str(got));
  }
}

// ---- 2: closed form ---------------------------------------------------------------

void closed_form(Bundle& b, const ReproOptions&) {
  int bad = 0;
  std::string first;
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned m = 1; m <= 10; ++m) {
      if (l_bound(n, m) != l_bound_recursive(n, m)) {
        if (bad++ == 0) first = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
  }
  claim(b, "l(n,m) recursion = 2^n (m+3) - 2 for n <= 10, 1 <= m <= 10", bad == 0,
        bad == 0 ? "110 pairs" : std::to_string(bad) + " mismatches, first " + first);
}

// ---- 3: universal construction ----------------------------------------------------

void universal(Bundle& b, const ReproOptions&) {
  const std::pair<unsigned, unsigned> shapes[] = {{0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
  for (const auto& [n, m] : shapes) {
    const RegisterLayout layout = io_layout(n, m);
    const Bits inputs = Bits{1} << n;
    const std::uint64_t functions = std::uint64_t{1} << (m * inputs);
    std::uint64_t ok = 0;
    std::uint64_t worst = 0;
    std::string failure;
    for (std::uint64_t code = 0; code < functions; ++code) {
      const TaskSpec f = make_task(layout, [&](Bits x) { return (code >> (m * x)) & ((Bits{1} << m) - 1); });
      const InstructionSequence x = gen_universal(f);
      const NosProfile prof = nos_profile(x, layout);
      const bool good = computes(x, f).ok && lloc(x) == l_bound(n, m) && classify(x).single_pass && prof.worst;
      if (good) {
        ++ok;
        worst = std::max(worst, *prof.worst);
      } else if (failure.empty()) {
        failure = "F#" + std::to_string(code) + ": " + render(x);
      }
    }
    const std::string shape = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
    claim(b, shape + " all " + std::to_string(functions) + " F: computes F, LLOC = " + std::to_string(l_bound(n, m)),
          ok == functions, failure);
    claim(b, shape + " worst NOS = 2n+m+1 = " + std::to_string(2 * n + m + 1), worst == 2 * n + m + 1,
          "measured " + std::to_string(worst));
  }
}

// ---- 4: parity ---------------------------------------------------------------------

void parity(Bundle& b, const ReproOptions&) {
  for (unsigned n = 1; n <= 8; ++n) {
    const TaskSpec t = parity_task(n);
    const InstructionSequence x0 = gen_paris0(n);
    const bool ok0 = computes(x0, t).ok && required_interface(x0).subinterface_of(parity_interface(n));
    claim(b, "PARIS0_" + std::to_string(n) + " computes P, LLOC = 5n-2", ok0 && lloc(x0) == 5 * n - 2,
          got_want(lloc(x0), std::size_t{5 * n - 2}));
    if (n < 2) continue;  // 2n+3 is stated for n > 1
    RegisterLayout l = t.layout;
    l.auxiliaries.push_back(Focus::scalar(RoleHeader::Aux0, 1));
    TaskSpec ta = t;
    ta.layout = l;
    const InstructionSequence x1 = gen_paris1(n);
    const bool ok1 = computes(x1, ta).ok && required_interface(x1).subinterface_of(parity_aux_interface(n));
    claim(b, "PARIS1_" + std::to_string(n) + " computes P, LLOC = 2n+3", ok1 && lloc(x1) == 2 * n + 3,
          got_want(lloc(x1), std::size_t{2 * n + 3}));
  }
}

// ---- 5: adders ----------------------------------------------------------------------

void adders(Bundle& b, const ReproOptions&) {
  const std::pair<AddVariant, const char*> variants[] = {
      {AddVariant::A, "Add"}, {AddVariant::A1, "Add'"}, {AddVariant::A2, "Add''"}};
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& [v, name] : variants) {
      const InstructionSequence x = gen_add(n, v);
      const CheckResult c = computes(x, add_task(n, v));
      const auto want = add_lloc_formula(n, v);
      claim(b, std::string(name) + "_" + std::to_string(n) + " adds, LLOC = " + std::to_string(want),
            c.ok && lloc(x) == want, c.ok ? got_want(lloc(x), std::size_t(want)) : c.detail);
    }
    const InstructionSequence x = gen_add(n, AddVariant::A3);
    const CheckResult c = computes(x, add_task(n, AddVariant::A3));
    const bool in_iface = required_interface(x).subinterface_of(add_interface(n, AddVariant::A3));
    claim(b, "Add'''_" + std::to_string(n) + " (repaired) adds, LLOC <= 8n, interface within I'''",
          c.ok && lloc(x) <= 8 * n && in_iface,
          c.ok ? "LLOC " + std::to_string(lloc(x)) + (in_iface ? "" : ", interface exceeds I'''") : c.detail);
  }
}

// ---- 6, 7, 15: searches ----------------------------------------------------------------

SearchConstraints complement_constraints(const ComplementCase& cc, unsigned jobs) {
  SearchConstraints c;
  c.interface = cc.iface;
  c.max_lloc = cc.claimed_min + 1;
  c.jobs = jobs;
  return c;
}

void complement_cases(Bundle& b, const ReproOptions& o, const std::vector<int>& ids, double per_search_budget) {
  for (const int id : ids) {
    const ComplementCase cc = complement_case(id);
    const std::string tag = "X_" + std::to_string(id);
    const CheckResult c = computes(cc.program, cc.task);
    const bool in_iface = required_interface(cc.program).subinterface_of(cc.iface);
    claim(b, tag + " = " + render(cc.program) + " computes 1-x within I_" + std::to_string(id), c.ok && in_iface,
          c.ok ? (in_iface ? "" : "uses " + required_interface(cc.program).str()) : c.detail);
    const auto t0 = Clock::now();
    const SearchResult r = min_lloc(cc.task, complement_constraints(cc, o.jobs));
    const double s = since(t0);
    claim(b, "min LLOC over I_" + std::to_string(id) + " = " + std::to_string(cc.claimed_min),
          r.found() && r.min_lloc == cc.claimed_min && s < per_search_budget,
          (r.found() ? "found " + std::to_string(r.min_lloc) + " (" + render(r.witnesses.front()) + ")"
                     : "none up to " + std::to_string(r.bound)) +
              ", " + fixed(s, 2) + " s");
  }
}

void complement(Bundle& b, const ReproOptions& o) { complement_cases(b, o, {1, 2, 3, 4, 5, 6, 7}, 60); }

void prop13(Bundle& b, const ReproOptions& o) {
  complement_cases(b, o, {7}, 60);
  const ComplementCase cc = complement_case(7);
  claim(b, "nothing with LLOC <= 4 over I_7", verify_lower_bound(cc.task, complement_constraints(cc, o.jobs), 4));
}

SearchConstraints g_constraints(unsigned k, unsigned jobs) {
  SearchConstraints c;
  c.interface = g_interface(k);
  c.max_lloc = 2 * k + 2;
  c.jobs = jobs;
  return c;
}

void example1(Bundle& b, const ReproOptions& o) {
  for (unsigned k = 1; k <= 2; ++k) {
    const InstructionSequence y = gen_example_g_short(k);
    claim(b, "Y^" + std::to_string(k) + "_G computes G^k within its interface",
          computes(y, g_task(k)).ok && required_interface(y).subinterface_of(g_interface(k)));
    const SearchResult r = min_lloc(g_task(k), g_constraints(k, o.jobs));
    claim(b, "min LLOC for G^" + std::to_string(k) + " = 2k+2 = " + std::to_string(2 * k + 2),
          r.found() && r.min_lloc == 2 * k + 2 && !r.witnesses.empty(),
          r.found() ? "found " + std::to_string(r.min_lloc) + " (" + render(r.witnesses.front()) + ")"
                    : "none up to " + std::to_string(r.bound));
  }
}

// ---- 8: example 2 -----------------------------------------------------------------------

void example2(Bundle& b, const ReproOptions&) {
  for (unsigned k = 1; k <= 4; ++k) {
    const std::string ks = std::to_string(k);
    const InstructionSequence x = gen_example_e(k, EVariant::X);
    const InstructionSequence y = gen_example_e(k, EVariant::Y);
    claim(b, "LLOC(X^" + ks + "_E) = 4k+4", lloc(x) == 4 * k + 4, got_want(lloc(x), std::size_t{4 * k + 4}));
    claim(b, "LLOC(Y^" + ks + "_E) = 5k+4", lloc(y) == 5 * k + 4, got_want(lloc(y), std::size_t{5 * k + 4}));
    claim(b, "max jump of Y^" + ks + "_E = 3", classify(y).max_jump == 3,
          got_want(classify(y).max_jump, std::uint32_t{3}));
    const RegisterLayout l = e_layout(k);
    const FunctionTable tx = extract_function(x, l, false);
    const FunctionTable ty = extract_function(y, l, false);
    std::string detail;
    for (std::size_t in = 0; in < tx.entries.size() && detail.empty(); ++in) {
      if (!(tx.entries[in] == ty.entries[in])) {
        detail = "differ on input " + bits_str(in, tx.input_bits);
      }
    }
    claim(b, "X^" + ks + "_E and Y^" + ks + "_E are equivalent", tx == ty, detail);
  }
}

// ---- 9: single visit ---------------------------------------------------------------------

void prop9(Bundle& b, const ReproOptions& o) {
  RegisterLayout l;
  l.inputs = {Focus::scalar(RoleHeader::In, 1), Focus::scalar(RoleHeader::In, 2)};
  l.outputs = {Focus::scalar(RoleHeader::Out0, 1)};
  // in2 <| in1 |> not in2: in2 when in1 holds, its complement otherwise
  const TaskSpec t = make_task(l, [](Bits x) {
    const bool in1 = (x & 1U) != 0;
    const bool in2 = (x & 2U) != 0;
    return Bits{in1 ? in2 : !in2};
  });
  SearchConstraints c;
  c.interface = parse_interface("in:1: M16\nin:2: M16\nout0:1: M16");
  c.single_visit = true;
  c.jobs = o.jobs;
  claim(b, "no single-visit single-pass program with LLOC <= 8 computes in2 <| in1 |> -in2",
        verify_lower_bound(t, c, 8), "bounded check only; longer programs are not covered");
}

// ---- 10: Copy1D ----------------------------------------------------------------------------

void copy1d(Bundle& b, const ReproOptions& o) {
  const InstructionSequence x = gen_copy1d();
  claim(b, "LLOC(Copy1D) = 6", lloc(x) == 6, got_want(lloc(x), std::size_t{6}));
  claim(b, "Copy1D is PGLB", x.dialect() == Dialect::PGLB && !classify(x).single_pass);
  const Focus src = Focus::array(RoleHeader::In, 3);
  const Focus dst = Focus::array(RoleHeader::Out0, 7);
  for (int index = 0; index <= 1; ++index) {
    int ok = 0;
    std::string failure;
    for (int cells = 0; cells < 4; ++cells) {
      const bool c0 = (cells & 1) != 0;
      const bool c1 = (cells & 2) != 0;
      ServiceFamily h = ServiceFamily::single(src, Kernel::array(index != 0, c0, c1)) +
                        ServiceFamily::single(dst, Kernel::array(false, false, false));
      const RunOutcome r = run(x, h);
      const Kernel* d = r.terminated() ? r.final_family.find(dst) : nullptr;
      if (d != nullptr && d->cell(0) == c0 && d->cell(1) == c1) {
        ++ok;
      } else if (failure.empty()) {
        failure = "source (" + std::to_string(int{c0}) + "," + std::to_string(int{c1}) + "): " +
                  (d != nullptr ? "destination (" + std::to_string(int{d->cell(0)}) + "," +
                                      std::to_string(int{d->cell(1)}) + ")"
                                : r.str());
      }
    }
    claim(b, "copies all 4 source contents, source index bit starting at " + std::to_string(index), ok == 4,
          std::to_string(ok) + "/4" + (failure.empty() ? "" : ", first failure " + failure));
  }
  SearchConstraints c;
  c.interface = parse_interface("in1D:3: i/i 1/1 1/c a1:i/c a1:i/i\nout1D0:7: i/i 1/1 1/c a1:i/c a1:i/i");
  c.jobs = o.jobs;
  const auto t0 = Clock::now();
  const bool none = verify_lower_bound(copy1d_task(), c, 6);
  claim(b, "no single-pass program with LLOC <= 6 copies over the restricted interface", none,
        fixed(since(t0), 2) + " s");
}

// ---- 11: unfolding ---------------------------------------------------------------------------

bool unfold_agrees(const InstructionSequence& x, const RegisterLayout& l, std::string& detail) {
  const UnfoldResult u = unfold_auto(x, l);
  const bool single = classify(u.program).single_pass;
  const bool same_fn = equivalent(u.program, x, l);
  const bool same_nos = nos_vector(u.program, l) == nos_vector(x, l);
  const bool size = lloc(u.program) == u.p * lloc(x);
  if (!(single && same_fn && same_nos && size)) {
    detail = render(x) + " p=" + std::to_string(u.p) + (same_fn ? "" : " function differs") +
             (same_nos ? "" : " NOS differs") + (size ? "" : " size differs");
    return false;
  }
  return true;
}

InstructionSequence random_pglb(std::mt19937_64& rng, const std::vector<Focus>& foci) {
  std::uniform_int_distribution<int> len(2, 6);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<std::uint32_t> jump(1, 3);
  std::uniform_int_distribution<unsigned> method(0, 15);
  std::uniform_int_distribution<int> pol(0, 2);
  std::uniform_int_distribution<std::size_t> focus(0, foci.size() - 1);
  const int n = len(rng);
  std::vector<Instruction> v;
  for (int i = 0; i < n; ++i) {
    const int k = kind(rng);
    if (k == 0) {
      v.push_back(Instruction::term());
    } else if (k <= 2) {
      v.push_back(Instruction::fwd(jump(rng)));
    } else if (k <= 4) {
      v.push_back(Instruction::bwd(jump(rng)));
    } else {
      v.push_back(Instruction::basic(static_cast<Polarity>(pol(rng)), foci[focus(rng)], Method::from_id(method(rng))));
    }
  }
  return InstructionSequence(std::move(v), Dialect::PGLB);
}

// Every run stops normally and at least one backward jump is taken.
bool interesting(const InstructionSequence& x, const RegisterLayout& l) {
  const auto v = nos_vector(x, l);
  if (!std::all_of(v.begin(), v.end(), [](const auto& s) { return s.has_value(); })) return false;
  const auto p = auto_power(x, l);
  return p && *p > 1;
}

void unfolding(Bundle& b, const ReproOptions&) {
  std::string detail;
  const TaskSpec copy = copy1d_task();
  claim(b, "Copy1D: power(unfold(X), p) equivalent, same NOS, LLOC = p * 6",
        unfold_agrees(gen_copy1d(), copy.layout, detail), detail);

  RegisterLayout l;
  l.inputs = {Focus::scalar(RoleHeader::In, 1)};
  l.outputs = {Focus::scalar(RoleHeader::Out, 1)};
  std::mt19937_64 rng(20240611);
  int checked = 0;
  int agreed = 0;
  std::string first;
  while (checked < 50) {
    const InstructionSequence x = random_pglb(rng, l.foci());
    if (!interesting(x, l)) continue;
    ++checked;
    std::string d;
    if (unfold_agrees(x, l, d)) {
      ++agreed;
    } else if (first.empty()) {
      first = d;
    }
  }
  claim(b, "50 random terminating PGLB programs (<= 6 instructions, 2 registers) unfold faithfully", agreed == 50,
        std::to_string(agreed) + "/50" + (first.empty() ? "" : ", first failure " + first));
}

// ---- 12: bounded jumps ---------------------------------------------------------------------

void bounded_jumps(Bundle& b, const ReproOptions&) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Bits> out(0, 7);
  int ok = 0;
  std::string first;
  for (int i = 0; i < 20; ++i) {
    std::vector<Bits> table(8);
    for (auto& v : table) v = out(rng);
    const TaskSpec f = make_task(io_layout(3, 3), [&](Bits x) { return table[x]; });
    const InstructionSequence x = gen_bounded_jump(f);
    const bool good = computes(x, f).ok && classify(x).max_jump <= 2 && lloc(x) == bounded_jump_lloc(3, 3);
    if (good) {
      ++ok;
    } else if (first.empty()) {
      first = render_task(f);
    }
  }
  claim(b, "20 random F at n=3, m=3: computes F, every jump <= 2, LLOC = (2n+2m+1)2^n+1", ok == 20,
        std::to_string(ok) + "/20" + (first.empty() ? "" : ", first failure on\n" + first));
}

// ---- 13: interface algebra -----------------------------------------------------------------

struct FamilyGen {
  std::mt19937_64 rng{13};
  std::vector<Focus> pool = {Focus::scalar(RoleHeader::In, 1),   Focus::scalar(RoleHeader::In, 2),
                             Focus::scalar(RoleHeader::Out0, 1), Focus::scalar(RoleHeader::Aux0, 1),
                             Focus::array(RoleHeader::In, 1),    Focus::array(RoleHeader::Out0, 2)};

  bool coin() { return (rng() & 1U) != 0; }

  Kernel kernel(bool array) {
    const int shape = static_cast<int>(rng() % 4);
    if (array) {
      Kernel k = Kernel::array(coin(), coin(), coin());
      if (shape == 0) return Kernel::inactive_of(KernelKind::Array1D);
      return shape == 1 ? restrict_methods(MethodSet(static_cast<std::uint32_t>(rng())), k) : k;
    }
    Kernel k = Kernel::reg(coin());
    if (shape == 0) return Kernel::inactive_of(KernelKind::Register);
    return shape == 1 ? restrict_methods(MethodSet(static_cast<std::uint32_t>(rng() & 0xFFFFU)), k) : k;
  }
  Kernel kernel_for(const Focus& f) { return kernel(f.is_array()); }

  ServiceFamily family() {
    ServiceFamily h;
    for (const auto& f : pool) {
      if (rng() % 3 == 0) h.set(f, kernel_for(f));
    }
    return h;
  }
  std::set<Focus> foci() {
    std::set<Focus> v;
    for (const auto& f : pool) {
      if (coin()) v.insert(f);
    }
    return v;
  }
  const Focus& focus() { return pool[rng() % pool.size()]; }
};

void law(Bundle& b, const std::string& name, const std::function<bool()>& holds) {
  int ok = 0;
  for (int i = 0; i < 1000; ++i) ok += holds() ? 1 : 0;
  claim(b, name, ok == 1000, std::to_string(ok) + "/1000");
}

void algebra(Bundle& b, const ReproOptions&) {
  FamilyGen g;
  const ServiceFamily empty;
  law(b, "restrict distributes: dV(H + K) = dV(H) + dV(K)", [&] {
    const auto v = g.foci();
    const auto h = g.family();
    const auto k = g.family();
    return restrict(v, h + k) == restrict(v, h) + restrict(v, k);
  });
  law(b, "restrict composes: d(V u W)(H) = dV(dW(H))", [&] {
    auto v = g.foci();
    const auto w = g.foci();
    const auto h = g.family();
    const auto lhs = restrict(w, restrict(v, h));
    v.insert(w.begin(), w.end());
    return restrict(v, h) == lhs;
  });
  law(b, "f in V: dV(f.U) = empty", [&] {
    auto v = g.foci();
    const Focus f = g.focus();
    v.insert(f);
    return restrict(v, ServiceFamily::single(f, g.kernel_for(f))).empty();
  });
  law(b, "f not in V: dV(f.U) = f.U", [&] {
    auto v = g.foci();
    const Focus f = g.focus();
    v.erase(f);
    const auto fu = ServiceFamily::single(f, g.kernel_for(f));
    return restrict(v, fu) == fu;
  });
  law(b, "empty family is the unit of composition", [&] {
    const auto h = g.family();
    return h + empty == h && empty + h == h;
  });
  law(b, "composition is commutative", [&] {
    const auto h = g.family();
    const auto k = g.family();
    return h + k == k + h;
  });
  law(b, "composition is associative", [&] {
    const auto h = g.family();
    const auto k = g.family();
    const auto m = g.family();
    return (h + k) + m == h + (k + m);
  });
  law(b, "collision gives the inactive kernel", [&] {
    const Focus f = g.focus();
    const auto c = ServiceFamily::single(f, g.kernel_for(f)) + ServiceFamily::single(f, g.kernel_for(f));
    const Kernel* k = c.find(f);
    return c.size() == 1 && k != nullptr && k->inactive;
  });
  law(b, "I(g.U + g.V) = g.{}", [&] {
    const Focus f = g.focus();
    const auto c = ServiceFamily::single(f, g.kernel_for(f)) + ServiceFamily::single(f, g.kernel_for(f));
    BasicActionInterface want;
    want.add(f, MethodSet{});
    return provided_interface(c) == want;
  });
}

// ---- 14: determinism -------------------------------------------------------------------------

void determinism(Bundle& b, const ReproOptions&) {
  auto machine = [](unsigned jobs) {
    std::string out;
    for (int id = 1; id <= 7; ++id) {
      const ComplementCase cc = complement_case(id);
      const auto c = complement_constraints(cc, jobs);
      out += search_report(min_lloc(cc.task, c), c, true);
    }
    for (unsigned k = 1; k <= 2; ++k) {
      const auto c = g_constraints(k, jobs);
      out += search_report(min_lloc(g_task(k), c), c, true);
    }
    return out;
  };
  const std::string one = machine(1);
  const std::string four = machine(4);
  claim(b, "searches of criteria 6 and 7 give byte-identical machine output for --jobs 1 and 4", one == four,
        std::to_string(one.size()) + " bytes");
}

// ---- 15: golden parity ---------------------------------------------------------------------

void parity_golden(Bundle& b, const ReproOptions& o) {
  SearchConstraints c;
  c.interface = parity_interface(2);
  c.max_lloc = 10;
  c.jobs = o.jobs;
  const SearchResult r = min_lloc(parity_task(2), c);
  claim(b, "min_lloc for parity n=2 over I^2 terminates with a result", r.found(),
        r.found() ? "min LLOC " + std::to_string(r.min_lloc) : "none up to 10");
  if (!r.found()) return;
  const std::string pinned = "min_lloc\t" + std::to_string(r.min_lloc) + "\nfirst_witness\t" +
                             render(r.witnesses.front()) + "\n";
  const std::filesystem::path path = std::filesystem::path(o.golden_dir) / "parity2.txt";
  std::ifstream in(path);
  if (!in) {
    std::filesystem::create_directories(o.golden_dir);
    std::ofstream(path) << pinned;
    claim(b, "value pinned in " + path.string(), std::filesystem::exists(path), "written on first computation");
    return;
  }
  std::stringstream have;
  have << in.rdbuf();
  claim(b, "matches the pinned value in " + path.string(), have.str() == pinned,
        have.str() == pinned ? "min LLOC " + std::to_string(r.min_lloc) : "pinned:\n" + have.str());
}

struct Entry {
  BundleInfo info;
  double budget;
  void (*body)(Bundle&, const ReproOptions&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"nos-table", 1, "NOS examples"}, 1, nos_table},
      {{"lbound", 2, "closed form of l(n, m)"}, 1, closed_form},
      {{"universal", 3, "universal construction"}, 30, universal},
      {{"parity", 4, "PARIS programs"}, 10, parity},
      {{"add-lloc", 5, "adders"}, 30, adders},
      {{"complement", 6, "complementation suite"}, 7 * 60, complement},
      {{"prop13", 6, "X_7 minimises LLOC over I_7"}, 60, prop13},
      {{"example1", 7, "Example 1, fan-out G^k"}, 5 * 60, example1},
      {{"example2", 8, "Example 2, E^k"}, 30, example2},
      {{"prop9", 9, "single-visit impossibility, bounded"}, 10 * 60, prop9},
      {{"copy1d", 10, "Copy1D"}, 2 * 3600, copy1d},
      {{"unfold", 11, "unfolding backward jumps"}, 2 * 60, unfolding},
      {{"boundedjump", 12, "bounded-jump compilation"}, 60, bounded_jumps},
      {{"algebra", 13, "interface algebra"}, 10, algebra},
      {{"determinism", 14, "search determinism across --jobs"}, 2 * (7 * 60 + 5 * 60), determinism},
      {{"parity-golden", 15, "parity n=2 minimum, pinned"}, 10 * 60, parity_golden},
  };
  return e;
}

}  // namespace

bool Bundle::claims_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const SubClaim& c) { return c.pass; });
}

bool Bundle::pass() const { return claims_pass() && seconds <= budget_seconds; }

const std::vector<BundleInfo>& bundle_ids() {
  static const std::vector<BundleInfo> ids = [] {
    std::vector<BundleInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return ids;
}

Bundle run_bundle(const std::string& id, const ReproOptions& opts) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    Bundle b;
    b.criterion = e.info.criterion;
    b.id = e.info.id;
    b.title = e.info.title;
    b.budget_seconds = e.budget;
    const auto t0 = Clock::now();
    e.body(b, opts);
    b.seconds = since(t0);
    return b;
  }
  throw std::invalid_argument("unknown repro id '" + id + "'");
}

std::string render_bundle(const Bundle& b) {
  const auto passed = std::count_if(b.claims.begin(), b.claims.end(), [](const SubClaim& c) { return c.pass; });
  std::string out = std::string(b.pass() ? "PASS" : "FAIL") + "  " + b.id + "  [" + std::to_string(passed) + "/" +
                    std::to_string(b.claims.size()) + ", " + fixed(b.seconds, 2) + " s of " +
                    fixed(b.budget_seconds, 0) + " s]\n";
  for (const auto& c : b.claims) {
    out += std::string("  ") + (c.pass ? "PASS" : "FAIL") + "  " + c.name;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace isq
