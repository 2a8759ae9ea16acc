// isq: command-line front end to the instruction-sequence toolkit.
//
// Programs, families, tasks and interfaces are given inline or as a file
// path; a file is used whenever the argument names an existing file.
// Exit status: 0 success, 1 negative answer (check failed, not equivalent,
// nothing found, a repro claim failed), 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isq/exec.hpp"
#include "isq/function.hpp"
#include "isq/generators.hpp"
#include "isq/gsc.hpp"
#include "isq/metrics.hpp"
#include "isq/repro.hpp"
#include "isq/search.hpp"
#include "isq/unfold.hpp"

using namespace isq;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& arg) {
  if (!arg.empty() && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

InstructionSequence load_program(const std::string& arg) {
  if (arg.empty()) throw UsageError("no program given");
  const InstructionSequence seq = parse(strip_comments(read_source(arg)));
  return InstructionSequence(seq.instrs());  // dialect from content
}

ServiceFamily load_family(const std::string& arg) {
  std::string text = read_source(arg);
  std::replace(text.begin(), text.end(), ';', '\n');
  return parse_family(text);
}

TaskSpec load_task(const std::string& arg) {
  if (arg.empty()) throw UsageError("a task or layout file is required");
  return parse_task(read_source(arg));
}

const char* kProgramHelp =
    "Program inline or as a file, e.g. \"+in:1.i/i;out0:1.1/1;!\". Files may hold // comments.";
const char* kTaskHelp =
    "Task file:\n  inputs: in:1 in:2\n  outputs: out0:1\n  aux: aux0:1      (optional)\n  00 -> 0\n  10 -> 1\n"
    "First character is bit 0; '-' is the empty vector; rows may be omitted (don't care).";
const char* kFamilyHelp = "Family inline or as a file: \"out0:1=br(1);in1D:3=arr(i=0,c0=1,c1=0)\".";
const char* kInterfaceHelp = "Interface file (\"in:1: i/i\\nout0:1: M16\") or inline \"in:1.{i/i} + out0:1.{1/1}\".";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isq: instruction sequences over Boolean registers"};
  app.name("isq");
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string prog;
  std::string prog2;
  std::string family;
  std::string task;
  std::string iface;
  bool trace = false;
  bool gsc = false;
  std::uint64_t max_steps = 0;

  auto add_program = [&](CLI::App* sub) {
    sub->add_option("program", prog, kProgramHelp);
    sub->add_option("--seq,--in", prog, kProgramHelp);
  };

  auto* c_parse = app.add_subcommand("parse", "Parse and print a program in canonical form");
  add_program(c_parse);

  auto* c_lloc = app.add_subcommand("lloc", "Print the number of instructions");
  add_program(c_lloc);
  c_lloc->add_flag("--gsc", gsc, "Input uses `rep v=a..b { ... }` blocks; print the non-expanding count too");

  auto* c_metrics = app.add_subcommand("metrics", "Class predicates and required interface");
  c_metrics->alias("classify");
  add_program(c_metrics);

  auto* c_run = app.add_subcommand("run", "Run a program on a service family");
  add_program(c_run);
  c_run->add_option("--family,-H", family, kFamilyHelp);
  c_run->add_flag("--trace", trace, "One line per step: position, instruction, reply");
  c_run->add_option("--max-steps", max_steps, "Stop after this many steps instead of detecting loops");

  auto* c_nos = app.add_subcommand("nos", "Number of steps (inf on divergence or error)");
  add_program(c_nos);
  c_nos->add_option("--family,-H", family, kFamilyHelp);
  c_nos->add_option("--layout", task, std::string("With a layout: worst and mean over all inputs.\n") + kTaskHelp);

  auto* c_apply = app.add_subcommand("apply", "Print the final family (empty on failure)");
  add_program(c_apply);
  c_apply->add_option("--family,-H", family, kFamilyHelp);

  auto* c_fn = app.add_subcommand("fn", "Print the function table of a program");
  add_program(c_fn);
  c_fn->add_option("--layout", task, kTaskHelp)->required();

  auto* c_equiv = app.add_subcommand("equiv", "Exit 0 when two programs compute the same table");
  c_equiv->add_option("a", prog, kProgramHelp)->required();
  c_equiv->add_option("b", prog2, kProgramHelp)->required();
  c_equiv->add_option("--layout", task, kTaskHelp)->required();

  auto* c_check = app.add_subcommand("check", "Exit 0 when the program computes the task");
  add_program(c_check);
  c_check->add_option("--task", task, kTaskHelp)->required();

  std::string gen_kind;
  unsigned gen_n = 1;
  unsigned gen_k = 1;
  int gen_id = 1;
  std::string gen_variant;
  bool gen_short = false;
  auto* c_gen = app.add_subcommand("gen", "Emit a generated program");
  c_gen->add_option("kind", gen_kind,
                    "paris0 | paris1 | add | universal | boundedjump | copy1d | g | e | complement")
      ->required()
      ->check(CLI::IsMember({"paris0", "paris1", "add", "universal", "boundedjump", "copy1d", "g", "e", "complement"}));
  c_gen->add_option("--n", gen_n, "Size parameter (paris0, paris1, add)");
  c_gen->add_option("--k", gen_k, "Size parameter (g, e)");
  c_gen->add_option("--id", gen_id, "Complement case 1..7");
  c_gen->add_option("--variant", gen_variant, "add: A A1 A2 A3; e: X Y");
  c_gen->add_flag("--short", gen_short, "g: the jump-free variant");
  c_gen->add_flag("--gsc", gsc, "paris0 and add: print the generalised semicolon form");
  c_gen->add_option("--task", task, std::string("universal, boundedjump: the total task.\n") + kTaskHelp);

  SearchConstraints sc;
  bool pglb = false;
  bool single_pass = false;
  bool machine = false;
  std::uint32_t max_jump = 0;
  auto* c_search = app.add_subcommand("search", "Shortest programs computing a task within an interface");
  c_search->add_option("--task", task, kTaskHelp)->required();
  c_search->add_option("--interface", iface, kInterfaceHelp)->required();
  c_search->add_option("--max-lloc", sc.max_lloc, "Largest length tried")->required();
  auto* o_sp = c_search->add_flag("--single-pass", single_pass, "No backward jumps (default)");
  c_search->add_flag("--pglb", pglb, "Allow backward jumps")->excludes(o_sp);
  auto* o_mj = c_search->add_option("--max-jump", max_jump, "Largest jump counter");
  c_search->add_flag("--single-visit", sc.single_visit, "At most one basic instruction per focus");
  c_search->add_flag("--final-term-only", sc.only_final_termination, "`!` only as the last instruction");
  c_search->add_option("--jobs", sc.jobs, "Worker threads; output does not depend on it");
  c_search->add_option("--max-witnesses", sc.max_witnesses, "Witnesses reported");
  c_search->add_flag("--machine", machine, "Tab-separated key/value lines");

  std::string power_arg = "auto";
  auto* c_unfold = app.add_subcommand("unfold", "Replace backward jumps by forward jumps into copies");
  add_program(c_unfold);
  c_unfold->add_option("--power", power_arg, "Number of copies, or `auto` (needs --layout)");
  c_unfold->add_option("--layout", task, kTaskHelp);

  auto* c_compile = app.add_subcommand("compile", "Truth-table compilation to a single-pass program");
  add_program(c_compile);
  c_compile->add_option("--layout", task, kTaskHelp)->required();

  std::string repro_id;
  ReproOptions ro;
  auto* c_repro = app.add_subcommand("repro", "Re-check a published claim; `list` shows the ids");
  c_repro->add_option("id", repro_id, "Bundle id, `all` or `list`")->required();
  c_repro->add_option("--jobs", ro.jobs, "Worker threads for searches");
  c_repro->add_option("--golden-dir", ro.golden_dir, "Where pinned values live");

  auto* c_repairs = app.add_subcommand("repairs", "List edits made to published programs (tab-separated)");

  try {
    // A program may start with a negative test (`-in:1.i/i;...`). Options
    // never contain ':', so such words are passed on as values; the leading
    // space is ignored by the program parser.
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
      std::string a = argv[i];
      if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a.find(':') != std::string::npos) a.insert(0, " ");
      args.push_back(std::move(a));
    }
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "isq: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  }

  try {
    if (c_parse->parsed()) {
      const auto seq = load_program(prog);
      std::cout << render(seq) << "\n";
      std::cerr << (seq.dialect() == Dialect::PGLB ? "pglb" : "single-pass") << ", " << lloc(seq) << " instructions\n";
      return 0;
    }
    if (c_lloc->parsed()) {
      if (gsc) {
        const GscSequence g = parse_gsc(strip_comments(read_source(prog)));
        std::cout << lloc(expand_gsc(g, Dialect::PGLB)) << "\t" << lloc_gsc(g) << "\n";
      } else {
        std::cout << lloc(load_program(prog)) << "\n";
      }
      return 0;
    }
    if (c_metrics->parsed()) {
      const auto seq = load_program(prog);
      std::cout << "lloc=" << lloc(seq) << " " << classify(seq).str() << "\n";
      std::cout << "interface=" << required_interface(seq).str() << "\n";
      return 0;
    }
    if (c_run->parsed()) {
      const auto seq = load_program(prog);
      const ServiceFamily h = load_family(family);
      Trace t;
      const RunOutcome r = max_steps > 0 ? run_bounded(seq, h, max_steps) : run(seq, h, trace ? &t : nullptr);
      if (trace && max_steps == 0) std::cout << render_trace(t);
      std::cout << r.str() << "\n";
      std::cout << "nos " << nos_str(r.terminated() ? std::optional<std::uint64_t>(r.steps) : std::nullopt) << "\n";
      if (r.terminated()) std::cout << r.final_family.str() << "\n";
      return 0;
    }
    if (c_nos->parsed()) {
      const auto seq = load_program(prog);
      if (!task.empty()) {
        std::cout << nos_profile(seq, load_task(task).layout).str() << "\n";
      } else {
        std::cout << nos_str(nos(seq, load_family(family))) << "\n";
      }
      return 0;
    }
    if (c_apply->parsed()) {
      std::cout << apply(load_program(prog), load_family(family)).str() << "\n";
      return 0;
    }
    if (c_fn->parsed()) {
      std::cout << extract_function(load_program(prog), load_task(task).layout, false).str();
      return 0;
    }
    if (c_equiv->parsed()) {
      const bool eq = equivalent(load_program(prog), load_program(prog2), load_task(task).layout);
      std::cout << (eq ? "equivalent" : "different") << "\n";
      return eq ? 0 : 1;
    }
    if (c_check->parsed()) {
      const CheckResult r = computes(load_program(prog), load_task(task));
      std::cout << (r.ok ? "ok" : "fails: " + r.detail) << "\n";
      return r.ok ? 0 : 1;
    }
    if (c_gen->parsed()) {
      auto add_variant = [&]() {
        if (gen_variant.empty() || gen_variant == "A") return AddVariant::A;
        if (gen_variant == "A1") return AddVariant::A1;
        if (gen_variant == "A2") return AddVariant::A2;
        if (gen_variant == "A3") return AddVariant::A3;
        throw UsageError("add variant must be A, A1, A2 or A3");
      };
      if (gsc && gen_kind == "paris0") {
        std::cout << paris0_gsc(gen_n).str() << "\n";
        return 0;
      }
      if (gsc && gen_kind == "add") {
        std::cout << add_gsc(gen_n, add_variant()).str() << "\n";
        return 0;
      }
      InstructionSequence out = gen_copy1d();
      if (gen_kind == "paris0") {
        out = gen_paris0(gen_n);
      } else if (gen_kind == "paris1") {
        out = gen_paris1(gen_n);
      } else if (gen_kind == "add") {
        out = gen_add(gen_n, add_variant());
      } else if (gen_kind == "universal") {
        out = gen_universal(load_task(task));
      } else if (gen_kind == "boundedjump") {
        out = gen_bounded_jump(load_task(task));
      } else if (gen_kind == "g") {
        out = gen_short ? gen_example_g_short(gen_k) : gen_example_g(gen_k);
      } else if (gen_kind == "e") {
        if (!gen_variant.empty() && gen_variant != "X" && gen_variant != "Y") throw UsageError("e variant must be X or Y");
        out = gen_example_e(gen_k, gen_variant == "Y" ? EVariant::Y : EVariant::X);
      } else if (gen_kind == "complement") {
        out = complement_case(gen_id).program;
      }
      std::cout << render(out) << "\n";
      return 0;
    }
    if (c_search->parsed()) {
      sc.interface = parse_interface(read_source(iface));
      sc.dialect = pglb ? Dialect::PGLB : Dialect::SinglePass;
      if (o_mj->count() > 0) sc.max_jump = max_jump;
      const SearchResult r = min_lloc(load_task(task), sc);
      std::cout << search_report(r, sc, machine);
      return r.found() ? 0 : 1;
    }
    if (c_unfold->parsed()) {
      const auto seq = load_program(prog);
      if (power_arg == "auto") {
        if (task.empty()) throw UsageError("--power auto needs --layout");
        const UnfoldResult u = unfold_auto(seq, load_task(task).layout);
        std::cout << render(u.program) << "\n";
        std::cerr << "p=" << u.p << "\n";
      } else {
        const unsigned p = static_cast<unsigned>(std::stoul(power_arg));
        std::cout << render(power(unfold_pglb(seq), p)) << "\n";
      }
      return 0;
    }
    if (c_compile->parsed()) {
      const CompileResult r = compile_pglb_tt(load_program(prog), load_task(task).layout);
      std::cout << render(r.program) << "\n";
      const int w = load_task(task).layout.input_bits();
      for (const Bits d : r.dropped) std::cerr << "dropped input " << bits_str(d, w) << " (no terminating run)\n";
      return 0;
    }
    if (c_repro->parsed()) {
      if (repro_id == "list") {
        for (const auto& b : bundle_ids()) std::cout << b.id << "\t" << b.criterion << "\t" << b.title << "\n";
        return 0;
      }
      std::vector<std::string> ids;
      if (repro_id == "all") {
        for (const auto& b : bundle_ids()) ids.push_back(b.id);
      } else {
        const auto& known = bundle_ids();
        if (std::none_of(known.begin(), known.end(), [&](const BundleInfo& b) { return b.id == repro_id; })) {
          throw UsageError("unknown repro id '" + repro_id + "' (try `isq repro list`)");
        }
        ids.push_back(repro_id);
      }
      bool all = true;
      for (const auto& id : ids) {
        const Bundle b = run_bundle(id, ro);
        std::cout << render_bundle(b);
        all = all && b.pass();
      }
      return all ? 0 : 1;
    }
    if (c_repairs->parsed()) {
      std::cout << render_repair_log();
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "isq: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "isq: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "isq: " << e.what() << "\n";
    return 2;
  } catch (const InterfaceError& e) {
    std::cerr << "isq: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
