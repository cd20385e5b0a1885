#include "polytor/character.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace polytor;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(POLYTOR_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify algebra --x W --n 2 --D 2").code, 0);
  EXPECT_EQ(run("verify nosuch").code, 2);
  EXPECT_EQ(run("verify module --x H --n 3").code, 2);
  EXPECT_EQ(run("char irr --x W --n 2 --mu 0,1").code, 2);  // not dominant
  EXPECT_EQ(run("char bogus").code, 2);
  EXPECT_EQ(run("pairing --n 2 --gamma 1").code, 2);
  EXPECT_EQ(run("verify derham --x S --n 3").code, 2);
  EXPECT_EQ(run("compose --x H --n 2 --k 1 --D 3").code, 1);
  EXPECT_EQ(run("compose --x W --n 2 --k 1 --D 3").code, 0);
}

TEST(Cli, VerifyJsonReport) {
  CliResult r = run("verify module --x W --n 2 --D 3 --lambda 1 --mu 1,0 --c 1,0 --format json");
  ASSERT_EQ(r.code, 0);
  Report rep = Report::from_json(r.out);
  EXPECT_TRUE(rep.passed());
  EXPECT_GT(rep.checked, 0);
  CliResult f = run("verify al-axioms --x H --n 2 --D 4 --lambda 1 --mu 1 --c 1,0 --format json");
  EXPECT_EQ(f.code, 1);
  EXPECT_FALSE(Report::from_json(f.out).passed());
}

TEST(Cli, CharIrreducibleOfTrivialIsOneEntry) {
  CliResult r = run("char irr --x W --n 2 --D 2 --mu 0,0");
  ASSERT_EQ(r.code, 0);
  GradedCharacter ch = GradedCharacter::from_json(r.out);
  EXPECT_EQ(ch.entries().size(), 1u);
  EXPECT_EQ(ch.coeff(0, HWeight{{0}, {0, 0}}), 1);
}

TEST(Cli, CharMatchesLibrary) {
  AlgebraConfig c{XKind::W, 2, 2, 3};
  LabeledWeight lw{{1}, {1, 0}, {Rational(1, 2), 0}};
  CliResult tilt = run("char tilt --x W --n 2 --D 3 --lambda 1 --mu 1,0 --c 1/2,0");
  CliResult standard = run("char std --x W --n 2 --D 3 --lambda 1 --mu 1,0 --c 1/2,0");
  ASSERT_EQ(tilt.code, 0);
  ASSERT_EQ(standard.code, 0);
  EXPECT_EQ(tilt.out, standard.out);
  EXPECT_EQ(GradedCharacter::from_json(standard.out), ch_standard(c, lw, 3));

  CliResult costd = run("char costd --x W --n 2 --D 3");
  ASSERT_EQ(costd.code, 0);
  EXPECT_EQ(GradedCharacter::from_json(costd.out), gamma(c, 3));

  // S accepts n entries and restricts them
  CliResult s3 = run("char costd --x S --n 3 --D 2 --mu 2,1,1");
  CliResult s2 = run("char costd --x S --n 3 --D 2 --mu 1,0");
  ASSERT_EQ(s3.code, 0);
  EXPECT_EQ(s3.out, s2.out);
}

TEST(Cli, Pairing) {
  CliResult r = run("pairing --n 2 --gamma 1,1");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("verified").get<bool>());
  EXPECT_EQ(j.at("pairs").size(), 4u);
  CliResult one = run("pairing --n 1 --gamma 0");
  ASSERT_EQ(one.code, 0);
  auto k = nlohmann::json::parse(one.out);
  ASSERT_EQ(k.at("pairs").size(), 1u);
  EXPECT_EQ(k["pairs"][0]["f"], "1");
  EXPECT_EQ(k["pairs"][0]["g"], "1");
}

TEST(Cli, ComposeWitt) {
  CliResult r = run("compose --x W --n 2 --k 0 --D 3 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("factors").size(), 2u);
  EXPECT_EQ(j["factors"][0]["label"], "mu_0");
  EXPECT_EQ(j["factors"][1]["label"], "mu_1");
  EXPECT_EQ(j["factors"][1]["degree"], 1);
  CliResult t = run("compose --x W --n 2 --k 0 --D 3 --format table");
  EXPECT_NE(t.out.find("L(mu_1)"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"verify module --x S --n 3 --D 2 --seed 7 --format json", "char tilt --x H --n 2 --D 3 --mu 0",
                           "compose --x S --n 3 --k 1 --D 3 --format json"}) {
    CliResult a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}
