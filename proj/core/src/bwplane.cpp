#include "wallcross/bwplane.hpp"

#include <vector>

namespace wallcross {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// "s*b + t" with unit coefficients elided.
std::string affine_text(const std::string& slope_term, bool slope_zero, bool slope_negative,
                        const std::string& constant, bool constant_zero, bool constant_negative) {
  std::string out;
  if (!slope_zero) {
    out = slope_negative ? "-" + slope_term : slope_term;
  }
  if (!constant_zero) {
    if (out.empty()) {
      out = constant_negative ? "-" + constant : constant;
    } else {
      out += constant_negative ? " - " : " + ";
      out += constant;
    }
  }
  return out.empty() ? "0" : out;
}

std::string slope_term(const Rational& magnitude, const std::string& var) {
  if (magnitude == Rational(1)) return var;
  return magnitude.str() + "*" + var;
}

}  // namespace

WallLine WallLine::from_coefficients(const Rational& A, const Rational& B, const Rational& C) {
  if (A.is_zero() && B.is_zero()) {
    throw Error(ErrorCode::DegenerateLine, "A = B = 0 does not define a line");
  }
  Integer den = lcm(lcm(A.den(), B.den()), C.den());
  Rational scale(den);
  Integer a = (A * scale).num(), b = (B * scale).num(), c = (C * scale).num();
  Integer g = gcd(gcd(a, b), c);
  const Integer& lead = a != 0 ? a : b;
  if (lead < 0) g = -g;
  return WallLine(Rational(a, g), Rational(b, g), Rational(c, g));
}

WallLine WallLine::from_slope(const Rational& slope, const Rational& intercept) {
  return from_coefficients(Rational(1), -slope, -intercept);
}

WallLine WallLine::through(const PlanePoint& p, const PlanePoint& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "line through a single point");
  // (w - p.w)(q.b - p.b) = (b - p.b)(q.w - p.w)
  Rational db = q.b - p.b;
  Rational dw = q.w - p.w;
  return from_coefficients(db, -dw, dw * p.b - db * p.w);
}

WallLine WallLine::vertical(const Rational& b) { return from_coefficients(Rational(0), Rational(1), -b); }

Rational WallLine::slope() const {
  if (is_vertical()) throw Error(ErrorCode::Precondition, "slope of a vertical line");
  return -b_ / a_;
}

Rational WallLine::intercept() const {
  if (is_vertical()) throw Error(ErrorCode::Precondition, "intercept of a vertical line");
  return -c_ / a_;
}

Rational WallLine::w_at(const Rational& b) const { return slope() * b + intercept(); }

Surd WallLine::value(const Surd& b, const Surd& w) const {
  return Surd(a_) * w + Surd(b_) * b + Surd(c_);
}

std::string WallLine::equation() const {
  if (is_vertical()) return "b = " + (-c_ / b_).str();
  Rational s = slope(), t = intercept();
  return "w = " + affine_text(slope_term(s.abs(), "b"), s.is_zero(), s.sign() < 0, t.abs().str(), t.is_zero(),
                              t.sign() < 0);
}

bool slope_order(const WallLine& x, const WallLine& y) {
  if (x.is_vertical() != y.is_vertical()) return y.is_vertical();
  if (!x.is_vertical()) {
    Rational sx = x.slope(), sy = y.slope();
    if (sx != sy) return sx < sy;
  }
  return x.triple() < y.triple();
}

bool in_U(const Rational& b, const Rational& w) { return w > b * b / Rational(2); }

std::optional<WallLine> wall_line(const NumClass& u, const NumClass& v, const CY3Context& ctx) {
  Rational u0 = C0(u, ctx), v0 = C0(v, ctx);
  Rational A = v0 * u.c1 - u0 * v.c1;
  Rational B = v.c2 * u0 - u.c2 * v0;
  Rational C = u.c2 * v.c1 - v.c2 * u.c1;
  if (A.is_zero() && B.is_zero()) return std::nullopt;
  return WallLine::from_coefficients(A, B, C);
}

BoundaryIntersection intersect_boundary(const WallLine& l) {
  BoundaryIntersection out;
  if (l.is_vertical()) {
    out.kind = BoundaryIntersection::Kind::Single;
    out.a = out.b = Surd(-l.C() / l.B());
    return out;
  }
  // A b^2/2 + B b + C = 0
  QuadraticRoots roots = quadratic_roots(l.A() / Rational(2), l.B(), l.C());
  if (roots.empty()) return out;
  if (roots.double_root) {
    out.kind = BoundaryIntersection::Kind::Tangent;
    out.a = out.b = roots.roots[0];
    return out;
  }
  out.kind = BoundaryIntersection::Kind::TwoPoints;
  out.a = roots.roots[0];
  out.b = roots.roots[1];
  return out;
}

WallLine ell_f(const NumClass& v, const CY3Context& ctx) {
  BgLinear k = bg_linear_coeffs(v, ctx);
  if (k.is_zero()) throw Error(ErrorCode::IdenticallyZero, "B vanishes identically for " + v.str());
  if (k.coeff_w.is_zero() && k.coeff_b.is_zero()) {
    throw Error(ErrorCode::IdenticallyZero, "B is a nonzero constant for " + v.str() + "; no zero locus");
  }
  return WallLine::from_coefficients(k.coeff_w, k.coeff_b, k.constant);
}

WallLine ell_js(const NumClass& v, std::int64_t n, const CY3Context& ctx) {
  NumClass vn = make_vn(v, n, ctx);
  PlanePoint o{Rational(-n), Rational(n) * Rational(n) / Rational(2)};
  if (vn.r != 0) {
    PlanePoint p = pi_point(vn, ctx);
    if (p == o) throw Error(ErrorCode::CoincidentPoints, "Pi(v_n) = Pi(O(-n))");
    return WallLine::through(p, o);
  }
  Rational s = std::get<AtInfinity>(pi(vn, ctx)).slope;
  return WallLine::from_slope(s, o.w - s * o.b);
}

std::optional<WallLine> SafeArea::rational_line() const {
  if (degenerate || !slope.is_rational() || !intercept.is_rational()) return std::nullopt;
  return WallLine::from_slope(slope.as_rational(), intercept.as_rational());
}

std::string SafeArea::equation() const {
  if (degenerate) return "b < " + mu.str();
  if (auto l = rational_line()) return l->equation();
  return "w = (" + slope.str() + ")*b + (" + intercept.str() + ")";
}

SafeArea safe_line(const NumClass& v, const CY3Context& ctx) {
  if (v.r < 0) throw Error(ErrorCode::Precondition, "safe_line needs r >= 0, got " + v.str());
  Rational delta = delta_H(v, ctx);
  Rational h3(ctx.h3);
  SafeArea out;
  out.mu = mu_H(v, ctx);
  if (v.r == 0) {
    if (v.c1.sign() <= 0) throw Error(ErrorCode::NotPositive, "rank 0 needs c1 > 0, got " + v.str());
    Rational s = v.c2 / v.c1;
    Rational half_gap = v.c1 / (Rational(2) * h3);
    out.slope = s;
    out.intercept = Rational(1, 8) * (v.c1 / h3) * (v.c1 / h3) - Rational(1, 2) * s * s;
    out.a_v = s - half_gap;
    out.b_v = s + half_gap;
    return out;
  }
  if (delta.sign() < 0) throw Error(ErrorCode::NegativeDiscriminant, "Delta_H < 0 for " + v.str());
  if (delta.is_zero()) {
    out.degenerate = true;
    return out;
  }
  PlanePoint p = pi_point(v, ctx);
  Rational r(v.r);
  Rational k = (r + Rational(2)) * (r + Rational(2)) / (r * r);
  // (k-1) s^2 - 2p(k-1) s + (2kq - p^2) = 0
  QuadraticRoots roots = quadratic_roots(k - Rational(1), Rational(-2) * p.b * (k - Rational(1)),
                                         Rational(2) * k * p.w - p.b * p.b);
  std::vector<SafeArea> found;
  for (const Surd& s : roots.roots) {
    Surd gap_half = Surd(r / (r + Rational(2))) * (Surd(p.b) - s);
    if (gap_half.sign() <= 0) continue;
    // the half-gap must really be sqrt of s^2 - 2sp + 2q
    Surd disc = s * s - Surd(Rational(2) * p.b) * s + Surd(Rational(2) * p.w);
    if (!(gap_half * gap_half == disc)) continue;
    SafeArea cand = out;
    cand.slope = s;
    cand.intercept = Surd(p.w) - s * Surd(p.b);
    cand.a_v = s - gap_half;
    cand.b_v = s + gap_half;
    if (!(cand.b_v < Surd(p.b))) continue;
    found.push_back(cand);
  }
  if (found.size() > 1) throw Error(ErrorCode::AmbiguousRoot, "two safe lines for " + v.str());
  if (found.empty()) throw Error(ErrorCode::Unsatisfiable, "no safe line for " + v.str());
  return found.front();
}

bool in_safe_area(const SafeArea& area, const NumClass& v, const Rational& b, const Rational& w,
                  const CY3Context& ctx) {
  if (!in_U(b, w)) return false;
  if (!(b * C0(v, ctx) < v.c1)) return false;
  if (area.degenerate) return true;
  Surd above = Surd(w) - area.slope * Surd(b) - area.intercept;
  return above.sign() > 0;
}

bool in_safe_area(const NumClass& v, const Rational& b, const Rational& w, const CY3Context& ctx) {
  return in_safe_area(safe_line(v, ctx), v, b, w, ctx);
}

WbgLine ell_wbg(const NumClass& v, std::int64_t n, const CY3Context& ctx) {
  if (v.r < 1) throw Error(ErrorCode::RankTooLow, "ell_wbg needs rank >= 1");
  NumClass vn = make_vn(v, n, ctx);
  Rational r(v.r);
  Rational eps = Rational(1) / (Rational(4) * r * r * Rational(ctx.h3));
  Rational mu = mu_H(v, ctx).value;
  Rational x1 = Rational(-n) + eps;
  Rational x2 = mu - eps;

  Rational slope, intercept;
  if (vn.r != 0) {
    PlanePoint q = pi_point(vn, ctx);
    if (x1 == q.b || x2 == q.b) throw Error(ErrorCode::Unsatisfiable, "pinned line is vertical");
    Rational s1 = (x1 * x1 / Rational(2) - q.w) / (x1 - q.b);
    Rational s2 = (x2 * x2 / Rational(2) - q.w) / (x2 - q.b);
    slope = min(s1, s2);
    intercept = q.w - slope * q.b;
  } else {
    slope = std::get<AtInfinity>(pi(vn, ctx)).slope;
    Rational t1 = x1 * x1 / Rational(2) - slope * x1;
    Rational t2 = x2 * x2 / Rational(2) - slope * x2;
    intercept = max(t1, t2);
  }
  // b^2 - 2 s b - 2 t = 0; the pinned root is rational, hence so is the other
  QuadraticRoots roots = quadratic_roots(Rational(1), Rational(-2) * slope, Rational(-2) * intercept);
  if (roots.roots.size() != 2) throw Error(ErrorCode::Unsatisfiable, "binding line does not cut U");
  Rational b1 = roots.roots[0].as_rational();
  Rational b2 = roots.roots[1].as_rational();
  if (!(b1 <= x1 && b2 >= x2 && b2 < mu)) {
    throw Error(ErrorCode::Unsatisfiable, "no line through Pi(v_n) meets both constraints at n = " +
                                              std::to_string(n));
  }
  return WbgLine{WallLine::from_slope(slope, intercept), b1, b2, eps};
}

bool bg_proved_region(const Rational& b, const Rational& w) {
  Rational fl(b.floor());
  Rational bound = b * b / Rational(2) + Rational(1, 2) * (b - fl) * (fl + Rational(1) - b);
  return w > bound;
}

}  // namespace wallcross
