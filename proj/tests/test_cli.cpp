#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MQLOGIC_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(MQLOGIC_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, EvalSumAndSup) {
  auto sum = run("eval -v " + data("sum_half.val") + " -f 'Ex x P(x)'");
  EXPECT_EQ(sum.code, 0);
  EXPECT_NE(sum.out.find("\"1\""), std::string::npos) << sum.out;
  auto sup = run("eval -v " + data("sup_half.val") + " -f 'Ex x P(x)'");
  EXPECT_EQ(sup.code, 0);
  EXPECT_NE(sup.out.find("\"1/2\""), std::string::npos) << sup.out;
  auto neg = run("eval -v " + data("sum_half.val") + " -f '~P(a)'");
  EXPECT_NE(neg.out.find("\"1/2\""), std::string::npos) << neg.out;
}

TEST(Cli, CheckSequentExitCodes) {
  EXPECT_EQ(run("check-sequent -v " + data("atoms.val") + " -s 'P(a) |- P(a)'").code, 0);
  EXPECT_EQ(run("check-sequent -v " + data("sup_half.val") + " -s '|- Ex x P(x)'").code, 1);
  EXPECT_EQ(run("check-sequent -v " + data("sum_half.val") + " -s '|- Ex x P(x)'").code, 0);
  EXPECT_EQ(run("check-sequent -v " + data("atoms.val") + " -s 'P(a) |- Q(a)'").code, 2);
}

TEST(Cli, SolveLiar) {
  auto r = run("solve-selfref -v " + data("liar.val") + " -f '~Ex x T(l)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"fixedPoints\": []"), std::string::npos) << r.out;
}

TEST(Cli, CheckDerivationPolicies) {
  EXPECT_EQ(run("check-derivation -d " + data("vacuous_liar.json") + " --policy mult").code, 0);
  auto add = run("check-derivation -d " + data("vacuous_liar.json") + " --policy add");
  EXPECT_EQ(add.code, 1);
  EXPECT_NE(add.out.find("multiplicity-mismatch"), std::string::npos) << add.out;
  EXPECT_EQ(run("check-derivation -d " + data("bad_init.json") + " --sig " + data("ab.sig")).code, 1);
}

TEST(Cli, FuzzAndUsage) {
  EXPECT_EQ(run("fuzz --rule Init --samples 200").code, 0);
  EXPECT_EQ(run("fuzz --rule ExistsRw --mode sup --samples 10000").code, 1);
  EXPECT_EQ(run("fuzz --rule TR").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("eval -v " + data("missing.val") + " -f 'P(a)'").code != 0, true);
}

TEST(Cli, ReproSingle) {
  auto r = run("repro prop2 --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("prop2"), std::string::npos);
  EXPECT_EQ(run("repro prop3").code, 0);
}
