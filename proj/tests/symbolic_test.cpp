#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"
#include "wallcross/error.hpp"
#include "wallcross/symbolic.hpp"

namespace wallcross {
namespace {

using testing::Gen;

CY3Context ctx_h3(std::int64_t h3, Rational c2h = Rational(0)) {
  CY3Context c;
  c.h3 = h3;
  c.c2h = c2h;
  return c;
}

const NumClass kA(1, 0, 0, 0), kB(1, 0, -1, 0), kC(0, 1, 0, 0);

TEST(Labels, RoundTrip) {
  for (Label l : {Label::BW, Label::LargeVolume, Label::Tilt, Label::Gieseker}) {
    EXPECT_EQ(parse_label(label_name(l)), l);
  }
  EXPECT_EQ(label_name(Label::LargeVolume), "large_volume");
  EXPECT_THROW(parse_label("slope"), Error);
}

TEST(Render, Symbols) {
  ClassAliases names{{kA, "a"}};
  EXPECT_EQ(render_symbol(J_bw("+", kA), names), "J_{bw+}(a)");
  EXPECT_EQ(render_symbol(J_inf(kA)), "J_inf(1,0,0,0)");
  EXPECT_EQ(render_symbol(J_ti(kB)), "J_ti(1,0,-1,0)");
  EXPECT_EQ(render_symbol(J_gie(kA), names), "J(a)");
  EXPECT_EQ(render_opaque({"C3", {kA, kB, kC}}, names), "C3[(a,(1,0,-1,0),(0,1,0,0))]");
}

TEST(Render, ExpressionLayout) {
  ClassAliases names{{kA, "a"}, {kB, "b"}, {kC, "c"}};
  InvariantExpr e = InvariantExpr(Rational(15)) * InvariantExpr(J_inf(kA)) +
                    InvariantExpr::opaque({"C3", {kA, kB, kC}}) * InvariantExpr(J_bw("-", kA)) *
                        InvariantExpr(J_bw("-", kB)) * InvariantExpr(J_bw("-", kC));
  // factors follow the class order c < b < a
  EXPECT_EQ(e.render(names), "15 * J_inf(a) + C3[(a,b,c)] * J_{bw-}(c)*J_{bw-}(b)*J_{bw-}(a)");
  InvariantExpr neg = InvariantExpr(J_gie(kA)) - InvariantExpr(Rational(1, 2)) * InvariantExpr(J_gie(kB));
  EXPECT_EQ(neg.render(names), "-1/2 * J(b) + J(a)");
  EXPECT_EQ(InvariantExpr().render(), "0");
}

TEST(Expr, CanonicalForm) {
  InvariantExpr x(J_gie(kA)), y(J_gie(kB));
  EXPECT_EQ(x * y, y * x);
  EXPECT_EQ(x + y - x, y);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x + x).coefficient_of(J_gie(kA)), Rational(2));
  EXPECT_EQ((x * y).terms().size(), 1u);
  EXPECT_FALSE((x * y).has_opaque());
}

TEST(Expr, EvaluateNeedsEveryValue) {
  InvariantExpr e = InvariantExpr(Rational(3)) * InvariantExpr(J_gie(kA)) * InvariantExpr(J_gie(kB)) +
                    InvariantExpr(Rational(1));
  std::map<InvariantSymbol, Rational> vals{{J_gie(kA), 2}, {J_gie(kB), Rational(1, 3)}};
  EXPECT_EQ(e.evaluate(vals), Rational(3));
  vals.erase(J_gie(kB));
  EXPECT_THROW(e.evaluate(vals), Error);
  InvariantExpr o = InvariantExpr::opaque({"C3", {kA}});
  EXPECT_THROW(o.evaluate({}), Error);
  EXPECT_EQ(o.evaluate({}, {{OpaqueCoefficient{"C3", {kA}}, Rational(7)}}), Rational(7));
}

// Random expressions over a small alphabet of symbols.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : g_(seed) {
    for (const NumClass& c : {kA, kB, kC}) {
      syms_.push_back(J_gie(c));
      syms_.push_back(J_bw("-", c));
    }
  }
  InvariantExpr expr(bool constant_term) {
    InvariantExpr e;
    int terms = static_cast<int>(g_.integer(0, 4));
    for (int i = 0; i < terms; ++i) {
      InvariantExpr m(g_.rational(5, 4));
      int deg = static_cast<int>(g_.integer(constant_term ? 0 : 1, 3));
      for (int k = 0; k < deg; ++k) m = m * InvariantExpr(syms_[g_.integer(0, syms_.size() - 1)]);
      if (g_.integer(0, 4) == 0) m = m * InvariantExpr::opaque({"C3", {kA, kB, kC}});
      e += m;
    }
    return e;
  }
  const std::vector<InvariantSymbol>& symbols() const { return syms_; }
  Gen& gen() { return g_; }

 private:
  Gen g_;
  std::vector<InvariantSymbol> syms_;
};

TEST(ExprProperty, CanonicalizationIdempotent) {
  ExprGen eg(51);
  for (int i = 0; i < 1000; ++i) {
    InvariantExpr e = eg.expr(true);
    EXPECT_EQ(InvariantExpr::from_monomials(e.terms()), e);
    EXPECT_EQ(e + InvariantExpr(), e);
    EXPECT_EQ(e * InvariantExpr(Rational(1)), e);
  }
}

TEST(ExprProperty, ZeroSubstitutionKillsConstantFreeExpressions) {
  ExprGen eg(52);
  std::map<InvariantSymbol, InvariantExpr> zero;
  for (const InvariantSymbol& s : eg.symbols()) zero[s] = InvariantExpr();
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(eg.expr(false).substitute(zero).is_zero());
}

TEST(ExprProperty, SubstitutionIsAHomomorphism) {
  ExprGen eg(53);
  for (int i = 0; i < 1000; ++i) {
    std::map<InvariantSymbol, InvariantExpr> sub;
    for (const InvariantSymbol& s : eg.symbols()) {
      if (eg.gen().integer(0, 2) == 0) sub[s] = eg.expr(true);
    }
    InvariantExpr x = eg.expr(true), y = eg.expr(true);
    EXPECT_EQ((x + y).substitute(sub), x.substitute(sub) + y.substitute(sub));
    EXPECT_EQ((x * y).substitute(sub), x.substitute(sub) * y.substitute(sub));
  }
}

TEST(ExprProperty, EvaluationIsAHomomorphism) {
  ExprGen eg(54);
  for (int i = 0; i < 300; ++i) {
    std::map<InvariantSymbol, Rational> vals;
    for (const InvariantSymbol& s : eg.symbols()) vals[s] = eg.gen().rational(3, 3);
    std::map<OpaqueCoefficient, Rational> coeffs{{OpaqueCoefficient{"C3", {kA, kB, kC}}, eg.gen().rational(3)}};
    InvariantExpr x = eg.expr(true), y = eg.expr(true);
    EXPECT_EQ((x * y).evaluate(vals, coeffs), x.evaluate(vals, coeffs) * y.evaluate(vals, coeffs));
    EXPECT_EQ((x - y).evaluate(vals, coeffs), x.evaluate(vals, coeffs) - y.evaluate(vals, coeffs));
  }
}

// Ordered tuples from `set` summing to `alpha`, by direct recursion on a
// multiple count: alpha = k * base and set entries j * base.
std::map<std::vector<int>, Rational> compositions(int k, const std::vector<int>& parts) {
  std::map<std::vector<int>, Rational> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int left) {
    if (left == 0) {
      int m = static_cast<int>(cur.size());
      out[cur] = Rational(m % 2 ? -1 : 1, m);
      return;
    }
    for (int p : parts) {
      if (p > left) continue;
      cur.push_back(p);
      go(left - p);
      cur.pop_back();
    }
  };
  go(k);
  return out;
}

TEST(Epsilon, Examples) {
  CY3Context c = ctx_h3(1);
  NumClass a0(1, 0, -1, 0);
  auto prim = epsilon_expansion(a0, {a0}, c);
  ASSERT_EQ(prim.terms.size(), 1u);
  EXPECT_EQ(prim.terms[0].coeff, Rational(-1));
  auto two = epsilon_expansion(Rational(2) * a0, {a0, Rational(2) * a0}, c);
  ASSERT_EQ(two.terms.size(), 2u);
  EXPECT_EQ(two.terms[0], (ExpansionTerm{{Rational(2) * a0}, Rational(-1)}));
  EXPECT_EQ(two.terms[1], (ExpansionTerm{{a0, a0}, Rational(1, 2)}));
  auto three = epsilon_expansion(Rational(3) * a0, {a0, Rational(2) * a0, Rational(3) * a0}, c);
  ASSERT_EQ(three.terms.size(), 4u);
  EXPECT_EQ(three.terms[0].coeff, Rational(-1));
  EXPECT_EQ(three.terms[1].coeff, Rational(1, 2));
  EXPECT_EQ(three.terms[2].coeff, Rational(1, 2));
  EXPECT_EQ(three.terms[3], (ExpansionTerm{{a0, a0, a0}, Rational(-1, 3)}));
}

TEST(Epsilon, MatchesCompositionEnumerator) {
  CY3Context c = ctx_h3(2);
  NumClass base(1, 1, 0, 1);
  std::vector<std::vector<int>> sets{{1}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3, 4}, {1, 2, 4}};
  for (const auto& parts : sets) {
    for (int k = 1; k <= 4; ++k) {
      std::vector<NumClass> classes;
      for (int p : parts) classes.push_back(Rational(p) * base);
      auto got = epsilon_expansion(Rational(k) * base, classes, c);
      auto want = compositions(k, parts);
      ASSERT_EQ(got.terms.size(), want.size());
      for (const ExpansionTerm& t : got.terms) {
        std::vector<int> key;
        for (const NumClass& x : t.tuple) key.push_back(static_cast<int>(x.r));
        ASSERT_TRUE(want.count(key));
        EXPECT_EQ(t.coeff, want[key]);
      }
    }
  }
}

TEST(Epsilon, UnboundedLengthIsAnError) {
  CY3Context c = ctx_h3(1);
  EXPECT_THROW(epsilon_expansion(NumClass(0, 0, 0, 0), {NumClass(1, -1, 0, 0), NumClass(-1, 1, 0, 0)}, c),
               Error);
}

TEST(TwoTerm, SignLaw) {
  CY3Context c = ctx_h3(1);
  NumClass o = structure_sheaf();
  for (std::int64_t k = -6; k <= 6; ++k) {
    Rational expected = Rational((k - 1) % 2 == 0 ? k : -k);
    EXPECT_EQ(two_term_coeff(o, NumClass(0, 0, 0, k), c), expected);
  }
  EXPECT_EQ(two_term_coeff(o, NumClass(0, 0, 0, 1), c), Rational(1));
  EXPECT_EQ(two_term_coeff(o, NumClass(0, 0, 0, 2), c), Rational(-2));
  EXPECT_EQ(two_term_coeff(o, NumClass(0, 0, 0, 0), c), Rational(0));
  EXPECT_THROW(two_term_coeff(o, NumClass(0, 0, 0, Rational(1, 2)), c), Error);
}

TEST(TwoTerm, IntegralOnTheIntegralLattice) {
  Gen g(55);
  CY3Context q = quintic_context();
  for (int i = 0; i < 500; ++i) {
    NumClass a = line_bundle(g.integer(-4, 4), q), b = line_bundle(g.integer(-4, 4), q);
    a.c3 += Rational(g.integer(-3, 3));
    EXPECT_TRUE(two_term_coeff(a, b, q).is_integer());
  }
}

TEST(JsRelation, QuinticRankOne) {
  CY3Context q = quintic_context();
  NumClass v(1, 0, 0, 0);
  JsRelation js = js_wall_relation(v, 2, q, {}, true);
  EXPECT_EQ(js.chi, Rational(15));
  EXPECT_EQ(js.leading, Rational(15));
  ClassAliases names{{make_vn(v, 2, q), "v_n"}, {v, "v"}};
  EXPECT_EQ(js.relation.render(names), "J_{bw+}(v_n) = 15 * J_inf(v)");
}

TEST(JsRelation, TorsionScalesTheLeadingTerm) {
  CY3Context q = quintic_context();
  q.torsion = 4;
  EXPECT_EQ(js_wall_relation(NumClass(1, 0, 0, 0), 2, q, {}, true).leading, Rational(60));
}

TEST(JsRelation, UncertifiedKeepsLowerChamberAndResidual) {
  CY3Context c = ctx_h3(1);
  NumClass v(2, 0, 0, 0);
  NumClass vn = make_vn(v, 3, c);
  std::vector<std::vector<NumClass>> residual{{NumClass(0, 3, Rational(-9, 2), Rational(9, 2)), NumClass(1, 0, 0, 0)}};
  JsRelation js = js_wall_relation(v, 3, c, residual, false);
  EXPECT_FALSE(js.certified);
  EXPECT_EQ(js.relation.rhs.coefficient_of(J_bw("-", vn)), Rational(1));
  EXPECT_TRUE(js.relation.rhs.has_opaque());
}

TEST(JsRelation, VanishingChi) {
  CY3Context c = ctx_h3(1);
  // chi(v(1)) = c3 + 1/6
  NumClass v(1, 0, 0, Rational(-1, 6));
  JsRelation js = js_wall_relation(v, 1, c, {}, true);
  EXPECT_EQ(js.chi, Rational(0));
  EXPECT_TRUE(js.leading.is_zero());
  EXPECT_EQ(js.relation.rhs.coefficient_of(J_inf(v)), Rational(0));
}

TEST(Hilbert, MatchesEulerCharacteristicOfTwists) {
  Gen g(56);
  for (int i = 0; i < 300; ++i) {
    CY3Context c = g.context();
    NumClass v = g.cls();
    auto a = hilbert_coefficients(v, c);
    for (std::int64_t t = -3; t <= 3; ++t) {
      Rational tt(t);
      Rational poly = a[0] * tt * tt * tt + a[1] * tt * tt + a[2] * tt + a[3];
      EXPECT_EQ(poly, euler_pairing(structure_sheaf(), twist(v, -tt, c), c));
    }
  }
}

TEST(Hilbert, Truncation) {
  CY3Context c = ctx_h3(2, 24);
  auto p = truncated_reduced_hilbert(NumClass(2, 4, 1, 0), c);
  // a = (2/3, 2, 1 + 4, .)
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], Rational(3));
  EXPECT_EQ(p[1], Rational(15, 2));
  EXPECT_TRUE(truncated_reduced_hilbert(NumClass(0, 0, 0, 3), c).empty());
}

TEST(TiltGieseker, Examples) {
  CY3Context c = ctx_h3(1);
  NumClass a1(1, 0, 0, 0), a2(1, 0, 0, 1);
  ASSERT_EQ(euler_pairing(a1, a2, c), Rational(1));
  NumClass alpha = a1 + a2;
  Relation none = tilt_gieseker_relation(alpha, {}, c);
  EXPECT_EQ(none.lhs, InvariantExpr(J_ti(alpha)));
  EXPECT_EQ(none.rhs, InvariantExpr(J_gie(alpha)));
  Relation one = tilt_gieseker_relation(alpha, {{a1, a2}}, c);
  EXPECT_EQ(one.rhs, InvariantExpr(J_gie(alpha)) + InvariantExpr(J_gie(a1)) * InvariantExpr(J_gie(a2)));
}

TEST(TiltGieseker, Errors) {
  CY3Context c = ctx_h3(1);
  NumClass alpha(2, 0, 0, 0);
  auto code_of = [&](const std::vector<std::vector<NumClass>>& d) {
    try {
      tilt_gieseker_relation(alpha, d, c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Precondition;
  };
  EXPECT_EQ(code_of({{NumClass(0, 0, 0, 1), NumClass(2, 0, 0, -1)}}), ErrorCode::RankConstraintViolated);
  EXPECT_EQ(code_of({{NumClass(1, 1, 0, 0), NumClass(1, -1, 0, 0)}}), ErrorCode::SlopeMismatch);
  EXPECT_THROW(tilt_gieseker_relation(alpha, {{NumClass(1, 0, 0, 0)}}, c), Error);
  EXPECT_THROW(tilt_gieseker_relation(alpha, {{NumClass(1, 0, 0, 0), NumClass(1, 0, 0, 1)}}, c), Error);
}

}  // namespace
}  // namespace wallcross
