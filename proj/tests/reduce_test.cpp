#include <gtest/gtest.h>

#include "wallcross/error.hpp"
#include "wallcross/reduce.hpp"

namespace wallcross {
namespace {

CY3Context ctx_h3(std::int64_t h3) {
  CY3Context c;
  c.h3 = h3;
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Precondition;
}

// Putting the solved expression back into the JS relation gives the left
// side identically.
void expect_conservation(const ReductionReport& rep) {
  std::map<InvariantSymbol, InvariantExpr> sub{{J_inf(rep.v), rep.solution.rhs}};
  EXPECT_EQ(rep.js.relation.rhs.substitute(sub), rep.js.relation.lhs);
}

TEST(Reduce, QuinticRankOne) {
  CY3Context q = quintic_context();
  ReductionReport rep = rank_reduce(NumClass(1, 0, 0, 0), 2, q);
  EXPECT_EQ(rep.formula(), "J_{bw+}(v_n) = 15 * J_inf(v)");
  EXPECT_TRUE(rep.certified());
  EXPECT_TRUE(rep.js.certified);
  EXPECT_EQ(rep.solution.render(rep.aliases), "J_inf(v) = 1/15 * J_{bw+}(v_n)");
  EXPECT_EQ(rep.tilt_solution.render(rep.aliases), "J_ti(v) = 1/15 * J_{bw+}(v_n)");
  EXPECT_EQ(rep.gieseker_solution.render(rep.aliases), "J(v) = 1/15 * J_{bw+}(v_n)");
  EXPECT_FALSE(rep.solution.rhs.has_opaque());
  ASSERT_EQ(rep.steps.size(), 9u);
  std::vector<std::string> names;
  for (const ReductionStep& s : rep.steps) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"normalize", "lines", "walls", "classify", "crossings", "js-wall",
                                             "solve", "large-volume-to-tilt", "tilt-to-gieseker"}));
  expect_conservation(rep);
}

TEST(Reduce, QuinticRankOneWithRegion) {
  CY3Context q = quintic_context();
  ReductionOptions opt;
  opt.region = Region{-3, -1, 1, 6};
  ReductionReport rep = rank_reduce(NumClass(1, 0, 0, 0), 2, q, opt);
  ASSERT_EQ(rep.walls.size(), 1u);
  EXPECT_EQ(rep.walls[0].classification, std::set<WallType>{WallType::Type1});
  EXPECT_TRUE(rep.wall_relations.empty());
  EXPECT_EQ(rep.formula(), "J_{bw+}(v_n) = 15 * J_inf(v)");
  EXPECT_TRUE(rep.certified());
}

TEST(Reduce, NormalizesFirst) {
  CY3Context c = ctx_h3(1);
  c.c2h = 10;  // chi(O(n)) = (n^3 + 5n)/6 is integral
  ReductionReport rep = rank_reduce(NumClass(1, 2, 2, Rational(4, 3)), 3, c);
  EXPECT_EQ(rep.twist, Rational(2));
  EXPECT_EQ(rep.v, NumClass(1, 0, 0, 0));
  EXPECT_TRUE(rep.steps[0].certified);
  // a twist by H/2 is not by a line bundle and chi(v(n)) leaves Z
  EXPECT_EQ(normalize_tH(NumClass(2, 1, 0, 0), c).t, Rational(1, 2));
  EXPECT_EQ(code_of([&] { rank_reduce(NumClass(2, 1, 0, 0), 3, c); }), ErrorCode::NonIntegerChi);
}

TEST(Reduce, RankTwoUsesTheQuarticCertificate) {
  CY3Context c = quintic_context();
  ReductionReport rep = rank_reduce(NumClass(2, 0, 0, 0), 1000, c);
  EXPECT_TRUE(rep.js.certified);
  const ReductionStep& js = rep.steps[5];
  EXPECT_EQ(js.name, "js-wall");
  EXPECT_TRUE(js.certified);
  EXPECT_NE(js.detail.find("quartic certificate passed"), std::string::npos);
  // without a region the wall step is not certified beyond rank 1
  EXPECT_FALSE(rep.steps[2].certified);
  EXPECT_FALSE(rep.certified());
  Rational chi = euler_pairing(structure_sheaf(), twist(rep.v, -1000, c), c);
  EXPECT_EQ(rep.js.chi, chi);
  expect_conservation(rep);
}

TEST(Reduce, RankThreeIsNeverCertified) {
  CY3Context c = ctx_h3(1);
  ReductionReport rep = rank_reduce(NumClass(3, 0, 0, 0), 50, c);
  EXPECT_FALSE(rep.js.certified);
  EXPECT_TRUE(rep.solution.rhs.symbols().size() >= 2u);
  expect_conservation(rep);
  ReductionOptions strict;
  strict.require_certificate = true;
  EXPECT_EQ(code_of([&] { rank_reduce(NumClass(3, 0, 0, 0), 50, c, strict); }), ErrorCode::CertificateFailed);
}

TEST(Reduce, OffJsWallsBecomeCrossingRelations) {
  CY3Context c = ctx_h3(1);
  ReductionOptions opt;
  opt.region = Region{-3, -1, 1, 6};
  ReductionReport rep = rank_reduce(NumClass(2, 0, 0, 0), 3, c, opt);
  ASSERT_EQ(rep.walls.size(), 5u);
  EXPECT_EQ(rep.wall_relations.size(), 4u);
  for (std::size_t i = 0; i < rep.wall_relations.size(); ++i) {
    std::string up = "J_{bw" + std::to_string(i) + "+}(v_n)";
    EXPECT_EQ(rep.wall_relations[i].lhs.render(rep.aliases), up);
  }
  expect_conservation(rep);
}

TEST(Reduce, Errors) {
  CY3Context c = ctx_h3(1);
  EXPECT_EQ(code_of([&] { rank_reduce(NumClass(0, 1, 0, 0), 2, c); }), ErrorCode::RankTooLow);
  EXPECT_EQ(code_of([&] { rank_reduce(NumClass(1, 0, 0, Rational(-1, 6)), 1, c); }), ErrorCode::CannotIsolate);
}

TEST(Reduce, LogListsEveryStep) {
  ReductionReport rep = rank_reduce(NumClass(1, 0, 0, 0), 2, quintic_context());
  std::string log = rep.log();
  EXPECT_NE(log.find("[0] normalize (certified)"), std::string::npos);
  EXPECT_NE(log.find("[8] tilt-to-gieseker (certified)"), std::string::npos);
}

}  // namespace
}  // namespace wallcross
