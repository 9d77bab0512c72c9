#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace wallcross::cli {
namespace {

const char* kH1 = R"(context = {"h3": 1, "c2h": 0})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_text(const std::string& command, const std::string& config, unsigned threads = 1) {
  RunOptions opt;
  opt.threads = threads;
  std::ostringstream out, err;
  int code = run(command, parse_config(config), opt, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "config accepted: " << text;
  return ErrorCode::Precondition;
}

TEST(Config, ParsesKeysAndComments) {
  RunConfig c = parse_config(std::string("# comment\n") + kH1 +
                             "\nclass = [2, 0, 0, 0]\nn = 10\nregion = {\"b\": [-3, \"-1/2\"], \"w\": [1, 6]}\n"
                             "points = [[0, 1], [\"1/2\", 2]]\nmesh = 8\n");
  EXPECT_EQ(c.context.h3, 1);
  EXPECT_EQ(c.cls, NumClass(2, 0, 0, 0));
  EXPECT_EQ(c.n, 10);
  ASSERT_TRUE(c.region);
  EXPECT_EQ(c.region->b_hi, Rational(-1, 2));
  EXPECT_EQ(c.points.size(), 2u);
  EXPECT_EQ(c.mesh, 8u);
}

TEST(Config, QuinticShorthand) {
  RunConfig c = parse_config("context = \"quintic\"\nclass = [1, 0, 0, 0]\n");
  EXPECT_EQ(c.context.h3, 5);
  EXPECT_EQ(c.context.c2h, Rational(50));
}

TEST(Config, Rejections) {
  std::string base = std::string(kH1) + "\nclass = [1, 0, 0, 0]\n";
  EXPECT_EQ(parse_error_code(base + "colour = 3\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "n = 2\nn = 3\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "n = [2\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "n = 0\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "n\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "oracle_margin = -1\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "require_certificate = 1\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(base + "oracle_box = {\"r\": [0, 0]}\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(std::string(kH1) + "\nclass = [1, 0, 0]\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code("class = [1, 0, 0, 0]\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code(std::string(kH1) + "\n"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_error_code("context = {\"h3\": 0, \"c2h\": 0}\nclass = [1, 0, 0, 0]\n"), ErrorCode::ConfigError);
}

TEST(Run, BgCheckIdenticallyZero) {
  Result r = run_text("bg-check", std::string(kH1) + "\nclass = [1, 0, 0, 0]\npoint = [0, 1]\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("B identically zero"), std::string::npos) << r.out;
}

TEST(Run, JsSetupLines) {
  Result r = run_text("js-setup", std::string(kH1) + "\nclass = [2, 0, 0, 0]\nn = 10\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("ell_f: w = -5*b"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ell_JS: w = -5*b"), std::string::npos) << r.out;
}

TEST(Run, WallsAndOracleAgree) {
  std::string cfg = std::string(kH1) + "\nclass = [0, 2, 0, 0]\nregion = {\"b\": [-2, 2], \"w\": [0, 4]}\n";
  EXPECT_EQ(run_text("walls", cfg).code, kOk);
  Result r = run_text("oracle-diff", cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("MATCH"), std::string::npos);
}

TEST(Run, SafeAreaPoints) {
  Result r = run_text("safe-area", std::string(kH1) + "\nclass = [1, 0, -1, 0]\npoints = [[0, 10], [0, \"1/100\"]]\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("safe line"), std::string::npos);
}

TEST(Run, PlotEmitsSvg) {
  Result r = run_text("plot", std::string(kH1) + "\nclass = [2, 0, 0, 0]\nn = 3\nregion = {\"b\": [-3, -1], \"w\": [1, 6]}\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
}

TEST(Run, ExitConfig) {
  std::string base = std::string(kH1) + "\nclass = [0, 2, 0, 0]\n";
  EXPECT_EQ(run_text("walls", base).code, kConfigError);     // no region
  EXPECT_EQ(run_text("js-setup", base).code, kConfigError);  // no n
  EXPECT_EQ(run_text("frobnicate", base).code, kConfigError);
}

TEST(Run, ExitPrecondition) {
  // The region contains the tangent point of the wall pencil.
  Result r = run_text("walls", std::string(kH1) + "\nclass = [1, 0, -2, 0]\nregion = {\"b\": [-3, -1], \"w\": [1, 4]}\n");
  EXPECT_EQ(r.code, kPreconditionError);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run_text("reduce", std::string(kH1) + "\nclass = [0, 1, 0, 0]\nn = 2\n").code, kPreconditionError);
}

TEST(Run, ExitOracleMismatch) {
  // The box misses every destabilizing class, so the oracle finds nothing.
  Result r = run_text("oracle-diff", std::string(kH1) +
                                         "\nclass = [2, 0, 0, 0]\nn = 3\nregion = {\"b\": [-3, -1], \"w\": [1, 6]}\n"
                                         "oracle_box = {\"r\": [0, 0], \"c1\": [0, 0], \"c2\": [0, 0], \"c3\": [0, 0]}\n");
  EXPECT_EQ(r.code, kOracleMismatch);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Run, ExitCertificate) {
  Result r = run_text("reduce", std::string(kH1) + "\nclass = [3, 0, 0, 0]\nn = 4\nrequire_certificate = true\n");
  EXPECT_EQ(r.code, kCertificateFailure);
}

TEST(Run, ReducePrintsFormula) {
  Result r = run_text("reduce", "context = \"quintic\"\nclass = [1, 0, 0, 0]\nn = 3\n");
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("J_inf(v)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[0] normalize"), std::string::npos) << r.out;
}

TEST(Run, ThreadCountDoesNotChangeOutput) {
  std::string cfg = std::string(kH1) + "\nclass = [2, 0, 0, 0]\nn = 3\nregion = {\"b\": [-3, -1], \"w\": [1, 6]}\n";
  Result a = run_text("walls", cfg, 1);
  Result b = run_text("walls", cfg, 4);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace wallcross::cli
