#include "grassmann/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = grassmann::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Normalize) {
  const Result r = run({"normalize", "1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 2*x1 + 3*x2 + 3*x1*x2\n");
}

TEST(Cli, NormalizeJson) {
  const Result r = run({"--format", "json", "normalize", "1/2 - x2*x1 + 3*x3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, R"({"":"1/2","3":"3","1.2":"1"})" "\n");
}

TEST(Cli, Grade) {
  const Result r = run({"grade", "1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1"});
  EXPECT_EQ(r.out, "even: 1 + 3*x1*x2\nodd: 2*x1 + 3*x2\n");
  const Result j = run({"grade", "--format", "json", "x1 + x1*x2"});
  EXPECT_EQ(j.out, R"({"even":{"1.2":"1"},"odd":{"1":"1"}})" "\n");
}

TEST(Cli, CenterRespectsGeneratorCount) {
  EXPECT_EQ(run({"-n", "2", "center", "x1*x2"}).out, "true\n");
  EXPECT_EQ(run({"-n", "2", "center", "x1"}).out, "false\n");
  EXPECT_EQ(run({"-n", "3", "center", "x1*x2*x3"}).out, "true\n");
  EXPECT_EQ(run({"-n", "4", "center", "x1*x2*x3"}).out, "false\n");
}

TEST(Cli, BodyAndSoul) {
  EXPECT_EQ(run({"body", "7/2 + x1"}).out, "7/2\n");
  EXPECT_EQ(run({"soul", "7/2 + x1"}).out, "x1\n");
  EXPECT_EQ(run({"--format", "json", "body", "x1"}).out, R"({"body":"0"})" "\n");
}

TEST(Cli, DeriveAndIntegrate) {
  EXPECT_EQ(run({"derive", "-i", "2", "x1*x2"}).out, "-x1\n");
  EXPECT_EQ(run({"integrate", "-i", "1", "3 + 5*x1"}).out, "5\n");
  EXPECT_EQ(run({"integrate", "-i", "5", "x1"}).code, 1);
}

TEST(Cli, NilIndex) {
  EXPECT_EQ(run({"-n", "2", "nilindex", "x1 + x2 + x1*x2"}).out, "2\n");
  EXPECT_EQ(run({"-n", "3", "nilindex", "x1 + x2*x3"}).out, "3\n");
  EXPECT_EQ(run({"nilindex", "--cap", "5", "1 + x1"}).out, "exceeds cap 5\n");
  EXPECT_EQ(run({"-n", "2", "nilindex", "1 + x1"}).out, "exceeds cap 3\n");
  EXPECT_EQ(run({"--format", "json", "nilindex", "x1"}).out, R"({"index":2,"cap":5})" "\n");
  EXPECT_EQ(run({"--format", "json", "nilindex", "1"}).out, R"({"index":null,"cap":5})" "\n");
  const Result zero = run({"nilindex", "x1*x1"});
  EXPECT_EQ(zero.code, 1);
  EXPECT_NE(zero.err.find("zero element"), std::string::npos);
}

TEST(Cli, CheckIdentityHolds) {
  const Result r = run({"check-identity", "[[y1,y2],y3]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "holds: true\nmode: exhaustive-multilinear\nsubstitutions: 4096\n");
}

TEST(Cli, CheckIdentityCounterexample) {
  const Result r = run({"-n", "2", "check-identity", "[y1,y2]"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out,
            "holds: false\nmode: exhaustive-multilinear\nsubstitutions: 7\n"
            "witness:\n  y1 -> x1\n  y2 -> x2\nvalue: 2*x1*x2\n");
  const Result j = run({"-n", "2", "--format", "json", "check-identity", "[y1,y2]"});
  EXPECT_EQ(j.code, 2);
  EXPECT_EQ(j.out,
            R"({"holds":false,"mode":"exhaustive-multilinear","substitutions":7,)"
            R"("witness":{"y1":{"1":"1"},"y2":{"2":"1"}},"value":{"1.2":"2"}})" "\n");
}

TEST(Cli, CheckIdentityDomainsAndRandomized) {
  EXPECT_EQ(run({"check-identity", "--domain", "odd", "y1*y2 + y2*y1"}).code, 0);
  const Result r = run({"check-identity", "--domain", "odd", "--trials", "20", "y1^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "holds: true\nmode: randomized\nsubstitutions: 20\n");
  EXPECT_EQ(run({"check-identity", "--seed", "3", "y1^2"}).code, 2);
}

TEST(Cli, InIdeal) {
  EXPECT_EQ(run({"in-ideal", "x1*x1"}).out, "true\n");
  EXPECT_EQ(run({"in-ideal", "x1*x2"}).out, "false\n");
  EXPECT_EQ(run({"in-ideal", "(x1*x2 + x2*x1)*x3"}).out, "true\n");
  EXPECT_EQ(run({"--format", "json", "in-ideal", "x1*x2*x3 + x3*x2*x1"}).out, R"({"in_ideal":true})" "\n");
}

TEST(Cli, ValidationErrors) {
  const Result bad = run({"normalize", "x0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("offset 1"), std::string::npos);
  EXPECT_EQ(run({"normalize", "x1 + y1"}).code, 1);
  EXPECT_EQ(run({"check-identity", "[x1,x2]"}).code, 1);
  EXPECT_EQ(run({"-n", "2", "normalize", "x3"}).code, 1);
  EXPECT_EQ(run({"normalize"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "normalize", "x1"}).code, 1);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"--format", "json", "check-identity", "--seed", "7", "y1*y1*y2"};
  EXPECT_EQ(run(args).out, run(args).out);
}
