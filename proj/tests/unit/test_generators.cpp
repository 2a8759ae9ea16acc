#include <gtest/gtest.h>

#include <random>

#include "isq/exec.hpp"
#include "isq/function.hpp"
#include "isq/generators.hpp"
#include "isq/metrics.hpp"
#include "isq/unfold.hpp"

using namespace isq;

namespace {

Bits xor_bits(Bits b) { return static_cast<Bits>(__builtin_popcountll(b) & 1); }

TaskSpec random_task(unsigned n, unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Bits> values(std::size_t{1} << n);
  for (auto& v : values) v = rng() & ((Bits{1} << m) - 1);
  return make_task(io_layout(n, m), [&](Bits in) { return values[in]; });
}

}  // namespace

TEST(LBound, ClosedFormAndRecursion) {
  EXPECT_EQ(l_bound(0, 1), 2U);
  EXPECT_EQ(l_bound(1, 1), 6U);
  EXPECT_EQ(l_bound(3, 2), 38U);
  for (unsigned n = 0; n < 12; ++n)
    for (unsigned m = 1; m < 6; ++m) EXPECT_EQ(l_bound(n, m), l_bound_recursive(n, m));
  EXPECT_THROW(l_bound(1, 0), std::invalid_argument);
}

TEST(Universal, Examples) {
  auto one = make_task(io_layout(0, 1), [](Bits) { return Bits{1}; });
  EXPECT_EQ(render(gen_universal(one)), "out0:1.1/1;!");

  auto id = make_task(io_layout(1, 1), [](Bits b) { return b; });
  auto x = gen_universal(id);
  EXPECT_EQ(lloc(x), l_bound(1, 1));
  EXPECT_TRUE(computes(x, id).ok);

  auto xr = make_task(io_layout(2, 1), xor_bits);
  auto y = gen_universal(xr);
  EXPECT_EQ(lloc(y), l_bound(2, 1));
  EXPECT_EQ(lloc(y), 14U);
  EXPECT_TRUE(computes(y, xr).ok);
}

TEST(Universal, RandomTasks) {
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned m = 1; m <= 3; ++m) {
      auto t = random_task(n, m, 100 * n + m);
      auto x = gen_universal(t);
      EXPECT_EQ(lloc(x), l_bound(n, m));
      EXPECT_TRUE(computes(x, t).ok);
      EXPECT_TRUE(classify(x).single_pass);
      EXPECT_TRUE(subinterface(required_interface(x), io_layout(n, m).interface()));
      for (const auto& in : x.instrs()) {
        if (in.kind != InstrKind::FwdJump) continue;
        bool ok = false;
        for (unsigned k = 0; k < n; ++k) ok = ok || in.jump == l_bound(k, m) + 1;
        EXPECT_TRUE(ok) << in.str();
      }
    }
  }
}

TEST(Parity, Generators) {
  EXPECT_EQ(render(gen_paris0(0)), "!");
  EXPECT_EQ(render(gen_paris0(1)), "+in:1.i/i;out0:1.1/1;!");
  EXPECT_EQ(lloc(gen_paris1(5)), 13U);
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(lloc(gen_paris0(n)), 5 * n - 2);
    EXPECT_TRUE(computes(gen_paris0(n), parity_task(n)).ok) << n;
    EXPECT_TRUE(subinterface(required_interface(gen_paris0(n)), parity_interface(n)));
  }
  for (unsigned n = 2; n <= 6; ++n) {
    EXPECT_EQ(lloc(gen_paris1(n)), 2 * n + 3);
    TaskSpec t = parity_task(n);
    t.layout.auxiliaries.push_back(parse_focus("aux0:1"));
    EXPECT_TRUE(computes(gen_paris1(n), t).ok) << n;
    EXPECT_TRUE(subinterface(required_interface(gen_paris1(n)), parity_aux_interface(n)));
  }
}

TEST(Add, SizesAndOracle) {
  EXPECT_EQ(lloc(gen_add(2, AddVariant::A)), 31U);
  EXPECT_EQ(lloc(gen_add(3, AddVariant::A2)), 37U);
  for (unsigned n = 1; n <= 4; ++n) {
    for (auto v : {AddVariant::A, AddVariant::A1, AddVariant::A2, AddVariant::A3}) {
      auto x = gen_add(n, v);
      if (v == AddVariant::A3) {
        EXPECT_LE(lloc(x), add_lloc_formula(n, v));
        EXPECT_TRUE(subinterface(required_interface(x), add_interface(n, v)));
      } else {
        EXPECT_EQ(lloc(x), add_lloc_formula(n, v));
      }
      EXPECT_EQ(expand_gsc(add_gsc(n, v)), x);
      EXPECT_TRUE(computes(x, add_task(n, v)).ok) << n;
    }
  }
}

TEST(ExampleG, SizesAndEquivalence) {
  EXPECT_THROW(gen_example_g(0), std::invalid_argument);
  EXPECT_EQ(lloc(gen_example_g_short(3)), 8U);
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_EQ(lloc(gen_example_g(k)), 2 * k + 4);
    EXPECT_EQ(lloc(gen_example_g_short(k)), 2 * k + 2);
    EXPECT_EQ(classify(gen_example_g(k)).max_jump, k + 2);
    EXPECT_TRUE(computes(gen_example_g(k), g_task(k)).ok);
    EXPECT_TRUE(computes(gen_example_g_short(k), g_task(k)).ok);
    EXPECT_TRUE(equivalent(gen_example_g(k), gen_example_g_short(k), g_task(k).layout));
  }
}

TEST(ExampleE, Sizes) {
  EXPECT_THROW(gen_example_e(0, EVariant::X), std::invalid_argument);
  EXPECT_EQ(lloc(gen_example_e(3, EVariant::X)), 16U);
  EXPECT_EQ(lloc(gen_example_e(3, EVariant::Y)), 19U);
  EXPECT_EQ(classify(gen_example_e(3, EVariant::Y)).max_jump, 3U);
  for (unsigned k = 1; k <= 4; ++k) {
    auto x = gen_example_e(k, EVariant::X);
    EXPECT_EQ(classify(x).max_jump, 2 * k + 2);
    EXPECT_TRUE(computes(x, e_task(k)).ok);
    EXPECT_TRUE(subinterface(required_interface(x), e_interface(k)));
  }
}

TEST(BoundedJump, Examples) {
  auto id = make_task(io_layout(1, 1), [](Bits b) { return b; });
  auto x = gen_bounded_jump(id);
  EXPECT_EQ(classify(x).max_jump, 2U);
  EXPECT_TRUE(computes(x, id).ok);

  auto c = make_task(io_layout(0, 2), [](Bits) { return Bits{2}; });
  auto y = gen_bounded_jump(c);
  EXPECT_EQ(classify(y).max_jump, 0U);
  EXPECT_EQ(lloc(y), bounded_jump_lloc(0, 2));

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto t = random_task(3, 3, seed);
    auto z = gen_bounded_jump(t);
    EXPECT_LE(classify(z).max_jump, 2U);
    EXPECT_LE(lloc(z), bounded_jump_lloc(3, 3));
    EXPECT_TRUE(computes(z, t).ok);
  }
}

TEST(Copy1D, CopiesBothCells) {
  auto x = gen_copy1d();
  EXPECT_EQ(lloc(x), 6U);
  EXPECT_EQ(x.dialect(), Dialect::PGLB);
  const auto t = copy1d_task();
  for (Bits s = 0; s < 4; ++s) {
    auto out = apply(x, initial_family(t.layout, s));
    const Kernel* k = out.find(parse_focus("out1D0:7"));
    ASSERT_NE(k, nullptr);
    EXPECT_EQ(k->cell(0), (s & 1) != 0);
    EXPECT_EQ(k->cell(1), (s & 2) != 0);
  }
  EXPECT_TRUE(computes(x, t).ok);
}

TEST(Complement, Cases) {
  for (int id = 1; id <= 7; ++id) {
    auto c = complement_case(id);
    EXPECT_TRUE(computes(c.program, c.task).ok) << id;
    EXPECT_EQ(c.id, id);
  }
  EXPECT_EQ(complement_case(7).claimed_min, 5U);
  EXPECT_THROW(complement_case(8), std::invalid_argument);
}

TEST(Repairs, LogIsPopulated) {
  EXPECT_FALSE(repair_log().empty());
  for (const auto& r : repair_log()) {
    EXPECT_FALSE(r.subject.empty());
    EXPECT_FALSE(r.reason.empty());
  }
  const std::string text = render_repair_log();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(repair_log().size()));
}

TEST(Unfold, Rules) {
  EXPECT_EQ(render(unfold_pglb(parse("aux0:1.i/i;\\#1"))), "aux0:1.i/i;#1");
  EXPECT_EQ(render(unfold_pglb(parse("aux0:1.i/i;\\#2"))), "aux0:1.i/i;#0");
  EXPECT_EQ(render(unfold_pglb(parse("#3;!;\\#0"))), "#0;!;#3");  // \\#0 becomes #(n - 0)
  EXPECT_EQ(render(unfold_pglb(parse("#2;!;!"))), "#2;!;!");
  EXPECT_EQ(unfold_pglb(parse("!;\\#1")).dialect(), Dialect::SinglePass);
  EXPECT_EQ(lloc(power(parse("!;#1"), 3)), 6U);
  EXPECT_THROW(power(parse("!"), 0), std::invalid_argument);
}

TEST(Unfold, Copy1D) {
  auto x = gen_copy1d();
  const auto layout = copy1d_task().layout;
  auto u = unfold_auto(x, layout);
  EXPECT_GE(u.p, 2U);
  EXPECT_EQ(lloc(u.program), u.p * lloc(x));
  EXPECT_EQ(u.program.dialect(), Dialect::SinglePass);
  EXPECT_TRUE(equivalent(x, u.program, layout));
  EXPECT_EQ(nos_vector(x, layout), nos_vector(u.program, layout));
}

TEST(Unfold, UndefinedPower) {
  EXPECT_EQ(auto_power(parse("#0;!"), io_layout(1, 1)), std::nullopt);
  EXPECT_THROW(unfold_auto(parse("#0;!"), io_layout(1, 1)), std::invalid_argument);
}

TEST(Unfold, RandomCorpus) {
  std::mt19937_64 rng(21);
  const auto layout = io_layout(1, 1);
  std::uniform_int_distribution<int> len(2, 6), kind(0, 6), k(1, 3), mid(0, 15), pol(0, 2), foc(0, 1);
  int kept = 0;
  for (int t = 0; t < 4000 && kept < 100; ++t) {
    std::vector<Instruction> is;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      switch (kind(rng)) {
        case 0: is.push_back(Instruction::term()); break;
        case 1: is.push_back(Instruction::fwd(static_cast<std::uint32_t>(k(rng)))); break;
        case 2: is.push_back(Instruction::bwd(static_cast<std::uint32_t>(k(rng)))); break;
        default:
          is.push_back(Instruction::basic(static_cast<Polarity>(pol(rng)),
                                          foc(rng) ? parse_focus("in:1") : parse_focus("out0:1"),
                                          Method::from_id(static_cast<unsigned>(mid(rng)))));
      }
    }
    InstructionSequence x(is, Dialect::PGLB);
    auto nv = nos_vector(x, layout);
    if (!std::all_of(nv.begin(), nv.end(), [](const auto& v) { return v.has_value(); })) continue;
    auto u = unfold_auto(x, layout);
    ++kept;
    EXPECT_TRUE(equivalent(x, u.program, layout)) << render(x);
    EXPECT_EQ(nos_vector(u.program, layout), nv) << render(x);
  }
  EXPECT_GT(kept, 20);
}

TEST(Compile, Examples) {
  auto c = compile_pglb_tt(gen_copy1d(), copy1d_task().layout);
  EXPECT_TRUE(c.dropped.empty());
  EXPECT_EQ(c.program.dialect(), Dialect::SinglePass);
  EXPECT_TRUE(computes(c.program, copy1d_task()).ok);

  auto p = gen_paris0(3);
  auto cp = compile_pglb_tt(p, io_layout(3, 1));
  EXPECT_TRUE(equivalent(p, cp.program, io_layout(3, 1)));
  EXPECT_EQ(lloc(cp.program), l_bound(3, 1));

  auto partial = compile_pglb_tt(parse("+in:1.i/i;!;#0"), io_layout(1, 1));
  EXPECT_EQ(partial.dropped, std::vector<Bits>{0});
}
