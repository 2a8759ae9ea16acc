#include <gtest/gtest.h>

#include <random>
#include <set>

#include "isq/exec.hpp"
#include "isq/generators.hpp"
#include "isq/metrics.hpp"
#include "isq/search.hpp"

using namespace isq;

namespace {

SearchConstraints constraints(std::string_view iface, std::size_t max_lloc) {
  SearchConstraints c;
  c.interface = parse_interface(iface);
  c.max_lloc = max_lloc;
  return c;
}

std::vector<std::string> rendered(const std::vector<InstructionSequence>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(render(s));
  return out;
}

TaskSpec complement_task() {
  return make_task(io_layout(1, 1), [](Bits b) { return b ^ 1; });
}

// Every total table realised by some candidate of length <= max_len.
std::set<std::string> realised(const SearchConstraints& c, const RegisterLayout& layout,
                                           std::size_t max_len, bool naive) {
  std::set<std::string> tables;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& x : enumerate(c, len, naive)) {
      auto t = extract_function(x, layout, false);
      if (t.total()) tables.insert(t.str());
    }
  }
  return tables;
}

}  // namespace

TEST(Constraints, Validate) {
  auto c = constraints("in:1.{i/i}", 0);
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_lloc = 2;
  c.max_jump = 3;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_jump = 2;
  EXPECT_NO_THROW(c.validate());
  auto d = c;
  d.jobs = 7;
  EXPECT_EQ(c.str(), d.str());
}

TEST(Enumerate, EmptyInterface) {
  SearchConstraints c;
  c.max_lloc = 1;
  EXPECT_EQ(rendered(enumerate(c, 1, true)), (std::vector<std::string>{"!", "#1"}));
  EXPECT_EQ(rendered(enumerate(c, 1)), (std::vector<std::string>{"!"}));
}

TEST(Enumerate, SingleMethod) {
  auto c = constraints("in:1.{i/i}", 1);
  auto naive = enumerate(c, 1, true);
  EXPECT_LE(naive.size(), 5U);
  EXPECT_EQ(naive.size(), 5U);  // !, #1, in:1.i/i, +in:1.i/i, -in:1.i/i
  EXPECT_TRUE(std::is_sorted(naive.begin(), naive.end(),
                             [](const auto& a, const auto& b) { return a.instrs() < b.instrs(); }));
}

TEST(Enumerate, PrunedForms) {
  auto c = constraints("in:1.{i/i} + out0:1.{1/1}", 3);
  for (const auto& x : enumerate(c, 3)) {
    const auto& last = x.at(x.size());
    EXPECT_EQ(last, Instruction::term()) << render(x);
    for (std::size_t p = 1; p <= x.size(); ++p) {
      const auto& in = x.at(p);
      if (in.kind == InstrKind::FwdJump) EXPECT_LE(p + in.jump, x.size()) << render(x);
      if (p > 1 && x.at(p - 1).is_basic() && x.at(p - 1).polarity != Polarity::Plain)
        EXPECT_NE(in, Instruction::fwd(1)) << render(x);
    }
  }
}

TEST(Enumerate, MaxJumpRespected) {
  auto c = constraints("in:1.{i/i}", 4);
  c.max_jump = 1;
  for (const auto& x : enumerate(c, 4, true)) EXPECT_LE(classify(x).max_jump, 1U);
  c.dialect = Dialect::PGLB;
  bool saw_bwd = false;
  for (const auto& x : enumerate(c, 2, true))
    for (const auto& in : x.instrs()) saw_bwd = saw_bwd || in.kind == InstrKind::BwdJump;
  EXPECT_TRUE(saw_bwd);
}

TEST(Search, ComplementMinima) {
  const std::size_t want[] = {2, 3, 4, 4, 3, 4, 5};
  for (int id = 1; id <= 7; ++id) {
    auto cc = complement_case(id);
    SearchConstraints c;
    c.interface = cc.iface;
    c.max_lloc = 6;
    auto r = min_lloc(cc.task, c);
    ASSERT_TRUE(r.found()) << id;
    EXPECT_EQ(r.min_lloc, want[id - 1]) << id;
    EXPECT_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      EXPECT_EQ(lloc(w), r.min_lloc);
      EXPECT_TRUE(computes(w, cc.task).ok) << render(w);
      EXPECT_TRUE(subinterface(required_interface(w), cc.iface)) << render(w);
    }
    if (r.min_lloc > 1) EXPECT_TRUE(verify_lower_bound(cc.task, c, r.min_lloc - 1));
  }
}

TEST(Search, NoneUpToBound) {
  auto c = constraints("in:1.{i/i}", 3);
  auto r = min_lloc(complement_task(), c);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.status, SearchStatus::NoneUpToBound);
  EXPECT_EQ(r.bound, 3U);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(Search, ParityN2) {
  SearchConstraints c;
  c.interface = parity_interface(2);
  c.max_lloc = 8;
  auto r = min_lloc(parity_task(2), c);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.min_lloc, 8U);
}

TEST(Search, ConstraintsHonoured) {
  auto cc = complement_case(3);
  SearchConstraints c;
  c.interface = cc.iface;
  c.max_lloc = 5;
  c.single_visit = true;
  c.only_final_termination = true;
  c.max_jump = 1;
  auto r = min_lloc(cc.task, c);
  for (const auto& w : r.witnesses) {
    auto k = classify(w);
    EXPECT_TRUE(k.single_visit);
    EXPECT_TRUE(k.only_final_termination);
    EXPECT_LE(k.max_jump, 1U);
  }
}

TEST(Search, PrunedAgreesWithNaive) {
  const char* ifaces[] = {
      "in:1.{i/i} + out0:1.{1/1}", "in:1.{c/0} + out0:1.{0/c}", "in:1.{i/i,c/i}", "in:1.{i/c} + out0:1.{i/c,1/1}",
      "in:1.{i/i} + out:1.{i/c}",  "inout:1.{1/c,i/0}",        "out1:1.{i/0}",
  };
  std::mt19937_64 rng(31);
  for (const char* text : ifaces) {
    auto c = constraints(text, 4);
    for (int t = 0; t < 3; ++t) {
      TaskSpec task;
      const Bits table = rng() & 3;
      if (std::string_view(text).find("inout") != std::string_view::npos) {
        task = make_task(RegisterLayout{parse_focus_list("inout:1"), parse_focus_list("inout:1"), {}},
                         [&](Bits b) { return (table >> b) & 1; });
      } else if (std::string_view(text).find("out:1") != std::string_view::npos) {
        task = make_task(RegisterLayout{parse_focus_list("in:1"), parse_focus_list("out:1"), {}},
                         [&](Bits b) { return (table >> b) & 1; });
      } else {
        task = make_task(io_layout(1, 1), [&](Bits b) { return (table >> b) & 1; });
      }
      auto fast = min_lloc(task, c);
      auto slow = min_lloc_naive(task, c);
      EXPECT_EQ(fast.found(), slow.found()) << text << " table " << table;
      if (fast.found() && slow.found()) EXPECT_EQ(fast.min_lloc, slow.min_lloc) << text << " table " << table;
    }
  }
}

TEST(Search, PrunedRealisesSameTables) {
  for (const char* text : {"in:1.{i/i} + out0:1.{1/1}", "in:1.{c/0} + out0:1.{0/c}", "in:1.{i/i} + in:2.{i/i}"}) {
    auto c = constraints(text, 3);
    TaskSpec probe;
    probe.layout = io_layout(std::string_view(text).find("in:2") != std::string_view::npos ? 2 : 1, 1);
    auto layout = search_layout(probe, c.interface);
    EXPECT_EQ(realised(c, layout, 3, false), realised(c, layout, 3, true)) << text;
  }
}

TEST(Search, DeterministicAcrossJobs) {
  auto cc = complement_case(7);
  SearchConstraints c;
  c.interface = cc.iface;
  c.max_lloc = 5;
  c.jobs = 1;
  auto a = min_lloc(cc.task, c);
  c.jobs = 4;
  auto b = min_lloc(cc.task, c);
  EXPECT_EQ(search_report(a, c, true), search_report(b, c, true));
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.stats, b.stats);
}

TEST(Search, SearchLayout) {
  TaskSpec t = complement_task();
  auto l = search_layout(t, parse_interface("in:1.{i/i} + out0:1.{1/1} + aux0:1.{i/c} + out1:2.{i/i} + in:2.{i/i}"));
  EXPECT_EQ(l.inputs, t.layout.inputs);
  EXPECT_EQ(l.outputs, t.layout.outputs);
  EXPECT_EQ(l.auxiliaries, parse_focus_list("out1:2 aux0:1"));
}

TEST(Search, Reports) {
  auto cc = complement_case(2);
  SearchConstraints c;
  c.interface = cc.iface;
  c.max_lloc = 4;
  c.max_witnesses = 1;
  auto r = min_lloc(cc.task, c);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witnesses.size(), 1U);
  const auto human = search_report(r, c, false);
  EXPECT_NE(human.find("min LLOC = 3, 1 witness shown"), std::string::npos) << human;
  const auto machine = search_report(r, c, true);
  EXPECT_NE(machine.find("status\tfound\n"), std::string::npos) << machine;
  EXPECT_NE(machine.find("min_lloc\t3\n"), std::string::npos) << machine;
  EXPECT_NE(machine.find("witness\t"), std::string::npos) << machine;

  auto none = min_lloc(complement_task(), constraints("in:1.{i/i}", 2));
  EXPECT_NE(search_report(none, constraints("in:1.{i/i}", 2), false).find("no program with LLOC <= 2"),
            std::string::npos);
}
