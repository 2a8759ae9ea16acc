#include <gtest/gtest.h>

#include <random>

#include "isq/exec.hpp"
#include "isq/function.hpp"
#include "isq/generators.hpp"

using namespace isq;

namespace {

ServiceFamily fam(std::string_view text) { return parse_family(text); }

InstructionSequence random_pglb(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 6), kind(0, 5), k(0, 3), idx(1, 2), mid(0, 15), pol(0, 2);
  std::vector<Instruction> is;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0: is.push_back(Instruction::term()); break;
      case 1: is.push_back(Instruction::fwd(static_cast<std::uint32_t>(k(rng)))); break;
      case 2: is.push_back(Instruction::bwd(static_cast<std::uint32_t>(k(rng)))); break;
      default:
        is.push_back(Instruction::basic(static_cast<Polarity>(pol(rng)),
                                        Focus::scalar(RoleHeader::Aux0, static_cast<std::uint32_t>(idx(rng))),
                                        Method::from_id(static_cast<unsigned>(mid(rng)))));
    }
  }
  return InstructionSequence(is, Dialect::PGLB);
}

}  // namespace

TEST(Nos, PublishedExamples) {
  const ServiceFamily h = fam("out0:1=br(0)");
  EXPECT_EQ(nos(parse("!"), h), 1U);
  EXPECT_EQ(nos(parse("#1;#1;!"), h), 3U);
  EXPECT_EQ(nos(parse("#1;#0;!;!"), h), std::nullopt);
  EXPECT_EQ(nos(parse("+out0:1.1/1;!"), fam("out0:1=br(1)")), 2U);
  EXPECT_EQ(nos(parse("#2;!"), h), std::nullopt);
  EXPECT_EQ(nos(parse("+in:3.i/i;!"), h), std::nullopt);
}

TEST(Nos, BackwardJumpBeforeStartDiverges) {
  // The test replies 1 and continues at \#2, whose target lies before
  // position 1.
  EXPECT_EQ(nos(parse("+out0:1.1/1;\\#2;!"), fam("out0:1=br(1)")), std::nullopt);
  EXPECT_EQ(nos(parse("\\#0;!"), fam("")), std::nullopt);
  EXPECT_EQ(nos(parse("#2;!;\\#1"), fam("")), 3U);
  EXPECT_EQ(nos_str(std::nullopt), "inf");
  EXPECT_EQ(nos_str(4), "4");
}

TEST(Run, Outcomes) {
  auto r = run(parse("+in:3.i/i;!"), fam("out0:1=br(0)"));
  EXPECT_EQ(r.status, RunStatus::Error);
  EXPECT_EQ(r.position, 1U);
  EXPECT_NE(r.cause.find("in:3"), std::string::npos);

  r = run(parse("out:1.1/1;!"), fam("out:1=br(0){i/i}"));
  EXPECT_EQ(r.status, RunStatus::Error);

  r = run(parse("aux0:1.i/i;!"), fam("aux0:1=br(0)\naux0:1=br(1)"));
  EXPECT_EQ(r.status, RunStatus::Error);

  r = run(parse("+aux0:1.i/i;!"), fam("aux0:1=br(0)"));
  EXPECT_EQ(r.status, RunStatus::Diverged);  // skipping past the end

  r = run(parse("!"), fam(""));
  EXPECT_TRUE(r.terminated());
  EXPECT_EQ(r.str(), "terminated steps=1");
}

TEST(Run, TestPolarities) {
  const auto h0 = fam("aux0:1=br(0)\naux0:2=br(0)");
  // +a: reply 1 continues, reply 0 skips.
  auto r = run(parse("+aux0:1.1/i;aux0:2.1/1;!"), h0);
  EXPECT_TRUE(r.final_family.find(parse_focus("aux0:2"))->content());
  r = run(parse("+aux0:1.0/i;aux0:2.1/1;!;!"), h0);
  EXPECT_FALSE(r.final_family.find(parse_focus("aux0:2"))->content());
  // -a is the reverse.
  r = run(parse("-aux0:1.0/i;aux0:2.1/1;!"), h0);
  EXPECT_TRUE(r.final_family.find(parse_focus("aux0:2"))->content());
  r = run(parse("-aux0:1.1/i;aux0:2.1/1;!;!"), h0);
  EXPECT_FALSE(r.final_family.find(parse_focus("aux0:2"))->content());
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(parse("!"), fam("aux0:1=br(1)")), fam("aux0:1=br(1)"));
  EXPECT_TRUE(apply(parse("+in:3.i/i;!"), fam("out0:1=br(0)")).empty());
  EXPECT_TRUE(apply(parse("#0;!"), fam("out0:1=br(0)")).empty());
  EXPECT_EQ(apply(complement_case(2).program, fam("in:1=br(0)\nout0:1=br(0)")), fam("in:1=br(0)\nout0:1=br(1)"));
  EXPECT_EQ(apply(complement_case(2).program, fam("in:1=br(1)\nout0:1=br(0)")), fam("in:1=br(1)\nout0:1=br(0)"));
}

TEST(Apply, UntouchedFociUnchanged) {
  auto h = fam("in:1=br(1)\nout0:1=br(0)\naux1:4=br(1)");
  auto out = apply(parse("out0:1.1/1;!"), h);
  EXPECT_EQ(*out.find(parse_focus("aux1:4")), Kernel::reg(true));
  EXPECT_EQ(*out.find(parse_focus("in:1")), Kernel::reg(true));
}

TEST(RunBounded, Examples) {
  EXPECT_TRUE(run_bounded(parse("!"), fam(""), 1).terminated());
  EXPECT_EQ(run_bounded(parse("#0;!"), fam(""), 5).status, RunStatus::Diverged);
  EXPECT_EQ(run_bounded(parse("#1;#1;!"), fam(""), 2).status, RunStatus::Diverged);

  const auto copy = gen_copy1d();
  for (int s = 0; s < 8; ++s) {
    ServiceFamily h = ServiceFamily::single(parse_focus("in1D:3"), Kernel::array(false, s & 1, (s >> 1) & 1));
    h.set(parse_focus("out1D0:7"), Kernel::array(false, false, false));
    auto a = run(copy, h);
    auto b = run_bounded(copy, h, 10 * 8 * 8 * 2);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.final_family, b.final_family);
    EXPECT_TRUE(a.terminated());
  }
}

TEST(Trace, LengthMatchesSteps) {
  Trace t;
  auto r = run(gen_paris0(3), initial_family(io_layout(3, 1), 0b101), &t);
  ASSERT_TRUE(r.terminated());
  EXPECT_EQ(t.size(), r.steps);
  EXPECT_EQ(t.back().instr, Instruction::term());
  EXPECT_TRUE(t.front().reply.has_value());
  EXPECT_FALSE(render_trace(t).empty());
}

TEST(Run, Deterministic) {
  std::mt19937_64 rng(3);
  const auto h = fam("aux0:1=br(0)\naux0:2=br(1)");
  for (int i = 0; i < 200; ++i) {
    auto x = random_pglb(rng);
    Trace t1, t2;
    auto a = run(x, h, &t1);
    auto b = run(x, h, &t2);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(t1.size(), t2.size());
  }
}

TEST(Run, SinglePassStepsBoundedByLength) {
  std::mt19937_64 rng(4);
  const auto h = fam("aux0:1=br(1)\naux0:2=br(0)");
  for (int i = 0; i < 500; ++i) {
    auto x = random_pglb(rng);
    std::vector<Instruction> fwd;
    for (auto in : x.instrs()) fwd.push_back(in.kind == InstrKind::BwdJump ? Instruction::fwd(in.jump) : in);
    InstructionSequence sp(fwd, Dialect::SinglePass);
    auto r = run(sp, h);
    EXPECT_LE(r.steps, sp.size());
  }
}

TEST(Run, LoopDetectionAgreesWithStepBound) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    auto x = random_pglb(rng);
    for (int s = 0; s < 4; ++s) {
      ServiceFamily h = ServiceFamily::single(parse_focus("aux0:1"), Kernel::reg(s & 1));
      h.set(parse_focus("aux0:2"), Kernel::reg((s >> 1) & 1));
      auto a = run(x, h);
      auto b = run_bounded(x, h, x.size() * 4 + 1);
      ASSERT_EQ(a.status, b.status) << render(x);
      if (a.terminated()) EXPECT_EQ(a.steps, b.steps) << render(x);
      EXPECT_EQ(apply(x, h).empty(), !nos(x, h).has_value());
    }
  }
}
