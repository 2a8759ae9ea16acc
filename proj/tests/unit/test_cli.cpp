#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Result isq(const std::string& args) {
  const std::string cmd = std::string(ISQ_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("isq_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, Lloc) {
  auto r = isq("lloc 'out1:1.0/0;!'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, Nos) {
  EXPECT_EQ(isq("nos --seq '#1;#1;!'").out, "3\n");
  EXPECT_EQ(isq("nos '#0;!'").out, "inf\n");
}

TEST(Cli, ParseCanonicalises) {
  auto r = isq("parse ' +in:1.i/i ; !;\\#1'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+in:1.i/i;!;\\#1\n");
  EXPECT_EQ(isq("parse 'in:1.a1:i/i;!'").code, 2);
  EXPECT_EQ(isq("parse '+in:1.i/i;;!'").code, 2);
}

TEST(Cli, ProgramFromFile) {
  const auto f = temp_file("prog.isq", "// complement\n-in:1.i/i;\nout0:1.1/1;\n!\n");
  EXPECT_EQ(isq("lloc " + f).out, "3\n");
}

TEST(Cli, RunWithTrace) {
  auto r = isq("run '+in:1.i/i;out0:1.1/1;!' --family 'in:1=br(0);out0:1=br(0)' --trace");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("terminated steps=2"), std::string::npos) << r.out;
}

TEST(Cli, Equiv) {
  const auto layout = temp_file("layout.task", "inputs: in:1\noutputs: out0:1\n");
  EXPECT_EQ(isq("equiv '!' '#1;!' --layout " + layout).code, 0);
  EXPECT_EQ(isq("equiv '!' 'out0:1.1/1;!' --layout " + layout).code, 1);
}

TEST(Cli, CheckAndSearch) {
  const auto task = temp_file("compl.task", "inputs: in:1\noutputs: out0:1\n0 -> 1\n1 -> 0\n");
  EXPECT_EQ(isq("check '-in:1.i/i;out0:1.1/1;!' --task " + task).code, 0);
  EXPECT_EQ(isq("check --seq='-in:1.i/i;out0:1.1/1;!' --task " + task).code, 0);
  EXPECT_EQ(isq("check '!' --task " + task).code, 1);

  auto r = isq("search --task " + task + " --interface 'in:1.{i/i} + out0:1.{1/1}' --max-lloc 4 --machine");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("min_lloc\t3\n"), std::string::npos) << r.out;
  auto j = isq("search --task " + task + " --interface 'in:1.{i/i} + out0:1.{1/1}' --max-lloc 4 --machine --jobs 3");
  EXPECT_EQ(r.out, j.out);

  EXPECT_EQ(isq("search --task " + task + " --interface 'in:1.{i/i}' --max-lloc 3").code, 1);
}

TEST(Cli, Gen) {
  EXPECT_EQ(isq("gen paris0 --n 1").out, "+in:1.i/i;out0:1.1/1;!\n");
  EXPECT_EQ(isq("lloc \"$(" + std::string(ISQ_CLI_PATH) + " gen add --n 2 --variant A)\"").out, "31\n");
}

TEST(Cli, Usage) {
  EXPECT_EQ(isq("").code, 2);
  EXPECT_EQ(isq("bogus").code, 2);
  EXPECT_EQ(isq("lloc").code, 2);
  EXPECT_EQ(isq("search --max-lloc 0").code, 2);
}

TEST(Cli, Repro) {
  auto list = isq("repro list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("nos-table"), std::string::npos);

  // The published backward-jump case is expected to disagree; see the README.
  auto r = isq("repro nos-table");
  EXPECT_NE(r.out.find("nos-table"), std::string::npos);
  EXPECT_TRUE(r.code == 0 || r.code == 1);

  auto lb = isq("repro lbound --golden-dir " + std::string(ISQ_GOLDEN_DIR));
  EXPECT_EQ(lb.code, 0) << lb.out;

  EXPECT_EQ(isq("repro nope").code, 2);
}
