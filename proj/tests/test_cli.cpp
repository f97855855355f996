#include <gtest/gtest.h>

#include <sstream>

#include "prym/cli.hpp"

using namespace prym;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Eval) {
  Outcome r = run({"eval", "--d", "5", "--g", "2", "--word", "T"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "z, 0 ; 0, z\n");
  r = run({"eval", "--d", "5", "--g", "2", "--word", "G1(1)"});
  EXPECT_EQ(r.out, "1, 1 ; 0, 1\n");

  const BlockMat th = evaluate(parse_word("TH(2)"), 4, 3);
  r = run({"eval", "--d", "4", "--g", "3", "--word", "TH(2)^-1"});
  EXPECT_EQ(r.code, 0);
  const BlockMat inv = parse_block_matrix(r.out.substr(0, r.out.size() - 1), 4, 3);
  EXPECT_EQ(inv * th, BlockMat::identity(4, 3));
}

TEST(Cli, EvalErrors) {
  Outcome r = run({"eval", "--d", "5", "--g", "2", "--word", "T * Foo(1)"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
  EXPECT_EQ(run({"eval", "--d", "1", "--g", "2", "--word", "T"}).code, kExitError);
  EXPECT_EQ(run({"eval", "--d", "5", "--g", "1", "--word", "T"}).code, kExitError);
  EXPECT_EQ(run({"eval", "--d", "5", "--g", "2", "--word", "Ti(2; 1)"}).code, kExitError);
  EXPECT_EQ(run({"eval", "--d", "5", "--g", "2"}).code, kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
  EXPECT_EQ(run({}).code, kExitError);
}

TEST(Cli, Check) {
  Outcome r = run({"check", "--d", "5", "--matrix", "1, 0 ; 0, 1", "--group", "Lambda"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "member Lambda\n");

  r = run({"check", "--d", "5", "--matrix", "1, 0 ; 1, 1", "--group", "Lambda"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_EQ(r.out, "non-member Lambda: lower-left != 0\n");

  const std::string remark = "-1+2*z+2*z^4, 0 ; 0, 3+2*z+2*z^4";
  EXPECT_EQ(run({"check", "--d", "5", "--matrix", remark, "--group", "UrUSharp"}).code, kExitOk);
  r = run({"check", "--d", "5", "--matrix", remark, "--group", "Lambda"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("det(D)"), std::string::npos);

  EXPECT_EQ(run({"check", "--d", "5", "--matrix", "1, 0 ; 0, 1", "--group", "Sp"}).code, kExitError);
  EXPECT_EQ(run({"check", "--d", "5", "--matrix", "1, 0, 0 ; 0, 1, 0 ; 0, 0, 1", "--group", "U"}).code, kExitError);
  EXPECT_EQ(run({"check", "--d", "5", "--g", "3", "--matrix", "1, 0 ; 0, 1", "--group", "U"}).code, kExitError);
}

TEST(Cli, DecomposeDelta) {
  Outcome r = run({"decompose-delta", "--d", "5", "--g", "3", "--B", "0, z^4 ; z, 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "G3(1,2,1)\n");
  r = run({"decompose-delta", "--d", "5", "--g", "2", "--B", "1"});
  EXPECT_EQ(r.out, "G1(1)\n");
  EXPECT_EQ(run({"decompose-delta", "--d", "5", "--g", "2", "--B", "z"}).code, kExitError);
}

TEST(Cli, ReduceLambda) {
  Outcome r = run({"reduce-lambda", "--d", "5", "--g", "2", "--matrix", "z, z ; 0, z", "--word", "Zeta(1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Zeta(1) * G1(1)\n");
  r = run({"reduce-lambda", "--d", "5", "--g", "2", "--matrix", "z, 0 ; 0, z", "--word", ""});
  EXPECT_EQ(r.code, kExitError);
}

TEST(Cli, Fox) {
  Outcome r = run({"fox", "--d", "5", "--g", "2", "--map", "x1 -> x2 x1 x2^-1", "--inverse", "x1 -> x2^-1 x1 x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "z\n");
  r = run({"fox", "--d", "5", "--g", "2", "--map", "x1 -> x1 x2", "--inverse", "x1 -> x1 x2^-1"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_EQ(r.out.rfind("not in Gamma_{X,C}: ", 0), 0u);
  EXPECT_EQ(run({"fox", "--d", "5", "--g", "2", "--map", "x1 ->", "--inverse", ""}).code, kExitError);
}

TEST(Cli, Selftest) {
  Outcome r = run({"selftest", "--max-d", "2", "--max-g", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = run({"selftest", "--max-d", "3", "--max-g", "2", "--inject-failure", "identity"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("FAIL identity"), std::string::npos);
  EXPECT_NE(r.out.find("some suites failed"), std::string::npos);

  EXPECT_EQ(run({"selftest", "--max-d", "2", "--max-g", "2", "--inject-failure", "nonsense"}).code, kExitError);
}

TEST(Cli, SelftestIsDeterministic) {
  const std::vector<std::string> args{"selftest", "--max-d", "4", "--max-g", "3", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Help) {
  Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("decompose-delta"), std::string::npos);
}
