#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(QB_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(QB_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, NormalForm) {
  auto r = cli("nf " + data("disc.pres") + " --expr 'xs*xs*x'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p^2*x*xs*xs + (1-p^2)*xs\n");
  auto s = cli("--params p=1/2 nf " + data("disc.pres") + " --expr 'xs*x'");
  EXPECT_EQ(s.out, "(1/2)*x*xs + (1/2)\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("verify monopole --degree-bound 2").code, 0);
  EXPECT_EQ(cli("verify monopole --degree-bound 2 --corrupt-transition").code, 1);
  EXPECT_EQ(cli("verify monopole --params p=2").code, 2);
  EXPECT_EQ(cli("verify presentation /nonexistent.pres").code, 2);
  EXPECT_EQ(cli("nf " + data("disc.pres") + " --expr 'x*'").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, JsonReportIsDeterministic) {
  auto a = cli("--report json verify monopole --degree-bound 2");
  auto b = cli("--report json verify monopole --degree-bound 2");
  ASSERT_EQ(a.code, 0);
  auto ja = nlohmann::ordered_json::parse(a.out), jb = nlohmann::ordered_json::parse(b.out);
  EXPECT_EQ(ja["schema_version"], 1);
  EXPECT_EQ(ja["status"], "pass");
  EXPECT_EQ(ja["run"]["degree_bound"], 2);
  EXPECT_TRUE(ja.contains("timing"));
  ja.erase("timing");
  jb.erase("timing");
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(Cli, VerifyDataFiles) {
  for (const char* f : {"disc.pres", "disc_calculus.pres", "circle_calculus.pres"}) {
    auto r = cli(std::string("--report json verify presentation ") + data(f));
    EXPECT_EQ(r.code, 0) << f;
    auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j["summary"]["fail"], 0) << f;
  }
  EXPECT_EQ(cli("verify hopf " + data("u1.hopf")).code, 0);
}

TEST(Cli, BasisCount) {
  auto r = cli("--report json basis " + data("disc_calculus.pres") + " --degree 1 --length 3");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  // dx or dxs times x^a xs^b with a + b <= 2
  EXPECT_EQ(j["count"], 12);
  EXPECT_EQ(j["basis"].size(), 12u);
}
