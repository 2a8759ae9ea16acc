#include <gtest/gtest.h>

#include <random>

#include "isq/generators.hpp"
#include "isq/gsc.hpp"
#include "isq/metrics.hpp"
#include "isq/syntax.hpp"

using namespace isq;

namespace {

Instruction random_instruction(std::mt19937_64& rng, bool allow_bwd) {
  std::uniform_int_distribution<int> kind(0, allow_bwd ? 3 : 2);
  std::uniform_int_distribution<int> small(0, 5);
  switch (kind(rng)) {
    case 0: return Instruction::term();
    case 1: return Instruction::fwd(static_cast<std::uint32_t>(small(rng)));
    case 3: return Instruction::bwd(static_cast<std::uint32_t>(small(rng)));
    default: break;
  }
  static const RoleHeader headers[] = {RoleHeader::In,   RoleHeader::InOut, RoleHeader::Out, RoleHeader::Out0,
                                       RoleHeader::Out1, RoleHeader::Aux0,  RoleHeader::Aux1};
  const bool array = small(rng) == 0;
  const auto header = headers[small(rng) % 7];
  const auto index = static_cast<std::uint32_t>(1 + small(rng));
  const std::string base = small(rng) == 0 ? "_a" : "";
  Focus f = array ? Focus::array(header, index, base) : Focus::scalar(header, index, base);
  std::uniform_int_distribution<unsigned> mid(0, array ? 31 : 15);
  return Instruction::basic(static_cast<Polarity>(small(rng) % 3), f, Method::from_id(mid(rng)));
}

}  // namespace

TEST(Parse, SingleTermination) {
  auto s = parse("!");
  EXPECT_EQ(s.size(), 1U);
  EXPECT_EQ(s.at(1), Instruction::term());
  EXPECT_EQ(lloc(s), 1U);
}

TEST(Parse, X2) {
  auto s = parse("+in:1.i/i;out0:1.1/1;!", Dialect::SinglePass);
  ASSERT_EQ(s.size(), 3U);
  EXPECT_EQ(s.at(1).polarity, Polarity::Pos);
  EXPECT_EQ(s.at(1).focus, Focus::scalar(RoleHeader::In, 1));
  EXPECT_EQ(s.at(2).method, (Method{MethodTarget::Direct, Code::One, Code::One}));
  EXPECT_EQ(s.dialect(), Dialect::SinglePass);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("+in:1.i/i;;!"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("in:0.i/i;!"), ParseError);
  EXPECT_THROW(parse("in:1.x/i;!"), ParseError);
  EXPECT_THROW(parse("in:1.a1:i/i;!"), ParseError);  // index-bit method on a scalar
  EXPECT_THROW(parse("\\#1;!", Dialect::SinglePass), ParseError);
}

TEST(Parse, WhitespaceAndBases) {
  auto s = parse("  -inout_a:12.c/1 ;\n #0 ; \\#3;!");
  EXPECT_EQ(render(s), "-inout_a:12.c/1;#0;\\#3;!");
  EXPECT_EQ(s.dialect(), Dialect::PGLB);
  EXPECT_EQ(s.at(1).focus.base, "_a");
  EXPECT_EQ(s.at(1).focus.index, 12U);
}

TEST(Parse, ArrayFoci) {
  auto s = parse("in1D:3.a1:i/c;out1D1:2.1/1;aux1D0:1.i/i;!");
  EXPECT_TRUE(s.at(1).focus.is_array());
  EXPECT_EQ(s.at(1).method.target, MethodTarget::IndexBit);
  EXPECT_EQ(s.at(2).focus.header, RoleHeader::Out1);
  EXPECT_EQ(render(s), "in1D:3.a1:i/c;out1D1:2.1/1;aux1D0:1.i/i;!");
}

TEST(Render, Copy1D) {
  auto s = parse("+in1D:3.i/i;out1D0:7.1/1;out1D0:7.1/c;+in1D:3.a1:i/c;!;\\#5");
  EXPECT_EQ(render(s), "+in1D:3.i/i;out1D0:7.1/1;out1D0:7.1/c;+in1D:3.a1:i/c;!;\\#5");
  EXPECT_EQ(s.size(), 6U);
}

TEST(Render, RoundTripRandom) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<int> len(1, 10);
    std::vector<Instruction> is;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) is.push_back(random_instruction(rng, true));
    InstructionSequence s(is);
    const auto text = render(s);
    const auto back = parse(text, s.dialect());
    EXPECT_EQ(back, s) << text;
    EXPECT_EQ(render(back), text);
    EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), ';')) + 1, s.size());
  }
}

TEST(Gsc, RepeatExpansion) {
  GscSequence g;
  g.repeat(make_repeat(3, "k", "out0:k.1/1"));
  EXPECT_EQ(render(expand_gsc(g)), "out0:1.1/1;out0:2.1/1;out0:3.1/1");
}

TEST(Gsc, TextForm) {
  auto g = parse_gsc("+in:1.i/i; rep l=2..4 { #4; +in:l.i/i; #3; #3; -in:l.i/i }; out0:1.1/1; !");
  EXPECT_EQ(expand_gsc(g), gen_paris0(4));
  EXPECT_EQ(parse_gsc(g.str()), g);
}

TEST(Gsc, PublishedSizes) {
  EXPECT_EQ(lloc(expand_gsc(paris0_gsc(4))), 18U);
  EXPECT_EQ(lloc(expand_gsc(add_gsc(2, AddVariant::A))), 31U);
}

TEST(Gsc, NegativeJumpRejected) {
  GscSequence g;
  g.repeat(make_repeat(3, "k", "#(2-k)"));
  EXPECT_THROW(expand_gsc(g), std::invalid_argument);
}

TEST(Gsc, LlocGsc) {
  GscSequence plain;
  plain.plain("in:1.i/i;!");
  EXPECT_EQ(lloc_gsc(plain), 2U);

  GscSequence one;
  one.repeat(make_repeat(1, "k", "out0:k.1/1"));
  EXPECT_EQ(lloc_gsc(one), 3U);

  GscSequence eight;
  eight.repeat(make_repeat(8, "k", "in:k.i/i;out0:k.1/1"));
  EXPECT_EQ(lloc_gsc(eight), 7U);
  EXPECT_LE(lloc_gsc(eight), lloc(expand_gsc(eight)));
}

TEST(Lloc, Examples) {
  EXPECT_EQ(lloc(parse("out1:1.0/0;!")), 2U);
  EXPECT_EQ(lloc(complement_case(7).program), 5U);
}

TEST(Lloc, AdditiveOverConcatenation) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Instruction> a, b;
    for (int i = 0; i < 1 + t % 4; ++i) a.push_back(random_instruction(rng, false));
    for (int i = 0; i < 1 + t % 7; ++i) b.push_back(random_instruction(rng, false));
    InstructionSequence x(a), y(b);
    auto xy = concat(x, y);
    EXPECT_EQ(lloc(xy), lloc(x) + lloc(y));
    EXPECT_EQ(required_interface(xy), required_interface(x) + required_interface(y));
  }
}

TEST(Classify, X7) {
  auto r = classify(complement_case(7).program);
  EXPECT_TRUE(r.single_pass);
  EXPECT_EQ(r.max_jump, 0U);
  EXPECT_FALSE(r.single_visit);
  EXPECT_TRUE(r.only_final_termination);
  EXPECT_TRUE(r.low_register_indices);
}

TEST(Classify, JumpsAndIndices) {
  EXPECT_EQ(classify(gen_example_g(2)).max_jump, 4U);
  EXPECT_EQ(classify(gen_example_g(4)).max_jump, 6U);
  EXPECT_FALSE(classify(parse("in:2.i/i;!")).low_register_indices);
  EXPECT_TRUE(classify(parse("in:1.i/i;out0:1.1/1;!")).single_visit);
  EXPECT_FALSE(classify(parse("!;!")).only_final_termination);
  EXPECT_FALSE(classify(parse("#1;\\#1;!")).single_pass);
}

TEST(Classify, SingleVisitBoundsBasics) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::vector<Instruction> is;
    for (int i = 0; i < 1 + t % 6; ++i) is.push_back(random_instruction(rng, false));
    InstructionSequence s(is);
    if (!classify(s).single_visit) continue;
    std::size_t basics = 0;
    for (const auto& in : s.instrs()) basics += in.is_basic() ? 1 : 0;
    EXPECT_LE(basics, required_interface(s).entries().size());
  }
}

TEST(RequiredInterface, Examples) {
  EXPECT_TRUE(required_interface(parse("!")).empty());
  EXPECT_TRUE(required_interface(parse("#3;!")).empty());

  auto x5 = required_interface(parse("+in:1.c/0;out0:1.0/c;!"));
  EXPECT_EQ(x5, parse_interface("in:1.{c/0} + out0:1.{0/c}"));

  auto u = required_interface(parse("+aux0:1.i/i;-aux0:1.i/c;aux0:1.i/i;!"));
  EXPECT_EQ(u.entries().size(), 1U);
  EXPECT_EQ(u.methods_of(parse_focus("aux0:1")).size(), 2);
}

TEST(Interface, ParseForms) {
  auto a = parse_interface("in:1: i/i i/c\nout0:1: 1/1   # comment\n");
  auto b = parse_interface("in:1.{i/i,i/c} + out0:1.{1/1}");
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse_interface(render_interface_file(a)), a);
  EXPECT_EQ(parse_interface("in:1: M16").methods_of(parse_focus("in:1")), MethodSet::m16());
}
