#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(FRESCOS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, AnalyzeExample) {
  CliRun r = cli("analyze -i 'fresco: (5/2 | 1 + 3b^2) (7/2 | 1)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"mu\": \"6\""), std::string::npos);
  EXPECT_NE(r.out.find("\"alpha\": \"3\""), std::string::npos);
}

TEST(Cli, AlphaFromStdin) {
  CliRun r = cli("alpha < " FRESCOS_DATA "/rank3.txt");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"beta\": \"-1\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("analyze -i 'fresco: (5/2 | 1 + ) (7/2 | 1)'").code, 1);
  EXPECT_EQ(cli("analyze -i 'fresco: (1/2 | 1) (1/2 | 1)'").code, 2);
  EXPECT_EQ(cli("subtheme -i 'fresco: (3 | 1) (4 | 1) (5 | 1)'").code, 2);
  EXPECT_EQ(cli("analyze --order 10 -i 'fresco: (5/2 | 1 + 3b^2) (7/2 | 1)'").code, 1);
  EXPECT_EQ(cli("analyze --format yaml -i '(3 | 1)'").code, 1);
  EXPECT_EQ(cli("nonsense").code, 1);
  EXPECT_EQ(cli("ss -i '(3 | 1) (4 | 1)' --format text").code, 0);
}

TEST(Cli, DomainErrorCarriesEngineName) {
  CliRun r = cli("analyze -i 'fresco: (5/2 | 2 + b)'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("NonUnitSeries"), std::string::npos);
}

TEST(Cli, BatchKeepsGoing) {
  CliRun r = cli("analyze -f " FRESCOS_DATA "/errors.txt");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("NotGeometric"), std::string::npos);
  EXPECT_NE(r.out.find("SyntaxError"), std::string::npos);
}

TEST(Cli, XiThemes) {
  CliRun r = cli("xi -f " FRESCOS_DATA "/themes.txt --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("presentation: fresco: (3/2 | 1) (1/2 | 1)"), std::string::npos);
}

TEST(Cli, VerifyAndIdentities) {
  CliRun v = cli("verify -i 'fresco: (5/2 | 1 + 3b^2) (7/2 | 1)' --samples 3 --seed 9");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("\"seed\": 9"), std::string::npos);
  EXPECT_EQ(cli("identities --samples 3").code, 0);
}
