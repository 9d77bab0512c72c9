#include "wallcross/numclass.hpp"

#include <sstream>

namespace wallcross {

void CY3Context::validate() const {
  if (h3 < 1) throw Error(ErrorCode::InvalidContext, "h3 must be >= 1");
  if (torsion < 1) throw Error(ErrorCode::InvalidContext, "torsion must be >= 1");
  for (auto d : lattice) {
    if (d < 1) throw Error(ErrorCode::InvalidContext, "lattice denominators must be >= 1");
  }
}

CY3Context quintic_context() {
  CY3Context ctx;
  ctx.h3 = 5;
  ctx.c2h = Rational(50);
  ctx.torsion = 1;
  return ctx;
}

std::string NumClass::str() const {
  std::ostringstream os;
  os << "(" << r << "," << c1 << "," << c2 << "," << c3 << ")";
  return os.str();
}

NumClass& NumClass::operator+=(const NumClass& o) {
  r += o.r;
  c1 += o.c1;
  c2 += o.c2;
  c3 += o.c3;
  if (c1c2 && o.c1c2) {
    *c1c2 += *o.c1c2;
  } else {
    c1c2.reset();
  }
  return *this;
}

NumClass& NumClass::operator-=(const NumClass& o) { return *this += -o; }

NumClass operator-(const NumClass& a) {
  NumClass n(-a.r, -a.c1, -a.c2, -a.c3);
  if (a.c1c2) n.c1c2 = -*a.c1c2;
  return n;
}

NumClass operator*(const Rational& k, const NumClass& a) {
  if (!k.is_integer()) throw Error(ErrorCode::Precondition, "class multiple must be an integer");
  NumClass n(k.num().get_si() * a.r, k * a.c1, k * a.c2, k * a.c3);
  if (a.c1c2) n.c1c2 = k * *a.c1c2;
  return n;
}

std::strong_ordering operator<=>(const NumClass& a, const NumClass& b) {
  if (auto c = a.r <=> b.r; c != 0) return c;
  if (auto c = a.c1 <=> b.c1; c != 0) return c;
  if (auto c = a.c2 <=> b.c2; c != 0) return c;
  return a.c3 <=> b.c3;
}

Rational C0(const NumClass& v, const CY3Context& ctx) { return Rational(v.r) * Rational(ctx.h3); }

NumClass structure_sheaf() { return NumClass(1, 0, 0, 0, Rational(0)); }

NumClass line_bundle(std::int64_t n, const CY3Context& ctx) {
  return twist(structure_sheaf(), Rational(-n), ctx);
}

NumClass twist(const NumClass& v, const Rational& b, const CY3Context& ctx) {
  Rational c0 = C0(v, ctx);
  Rational b2 = b * b / Rational(2);
  Rational b3 = b * b * b / Rational(6);
  NumClass out(v.r, v.c1 - b * c0, v.c2 - b * v.c1 + b2 * c0, v.c3 - b * v.c2 + b2 * v.c1 - b3 * c0);
  // ch1.c2(X) moves with ch1: (c1 - b r H).c2(X)
  if (v.c1c2) out.c1c2 = *v.c1c2 - b * Rational(v.r) * ctx.c2h;
  return out;
}

NumClass make_vn(const NumClass& v, std::int64_t n, const CY3Context& ctx) {
  if (v.r < 1) throw Error(ErrorCode::RankTooLow, "make_vn needs rank >= 1, got " + v.str());
  return v - line_bundle(-n, ctx);
}

Rational delta_H(const NumClass& v, const CY3Context& ctx) {
  return v.c1 * v.c1 - Rational(2) * v.c2 * C0(v, ctx);
}

Slope mu_H(const NumClass& v, const CY3Context& ctx) {
  if (v.r == 0) return Slope::inf();
  return Slope::of(v.c1 / C0(v, ctx));
}

Slope nu(const NumClass& v, const Rational& b, const Rational& w, const CY3Context& ctx) {
  if (!(w > b * b / Rational(2))) {
    throw Error(ErrorCode::OutsideU, "(" + b.str() + ", " + w.str() + ") is not in U");
  }
  Rational c0 = C0(v, ctx);
  Rational den = v.c1 - b * c0;
  if (den.is_zero()) return Slope::inf();
  return Slope::of((v.c2 - w * c0) / den);
}

Rational bg_form(const NumClass& v, const Rational& b, const Rational& w, const CY3Context& ctx) {
  NumClass t = twist(v, b, ctx);
  return (Rational(2) * w - b * b) * delta_H(v, ctx) + Rational(4) * t.c2 * t.c2 -
         Rational(6) * t.c1 * t.c3;
}

BgLinear bg_linear_coeffs(const NumClass& v, const CY3Context& ctx) {
  Rational c0 = C0(v, ctx);
  const Rational& c1 = v.c1;
  const Rational& c2 = v.c2;
  const Rational& c3 = v.c3;
  return BgLinear{c1 * c1 - Rational(2) * c0 * c2, Rational(3) * c0 * c3 - c1 * c2,
                  Rational(2) * c2 * c2 - Rational(3) * c1 * c3};
}

Rational resolved_c1c2(const NumClass& v, const CY3Context& ctx) {
  if (v.c1c2) return *v.c1c2;
  return v.c1 / Rational(ctx.h3) * ctx.c2h;
}

bool in_lattice(const NumClass& v, const CY3Context& ctx) {
  return (v.c1 * Rational(ctx.lattice[0])).is_integer() && (v.c2 * Rational(ctx.lattice[1])).is_integer() &&
         (v.c3 * Rational(ctx.lattice[2])).is_integer();
}

Rational euler_pairing(const NumClass& a, const NumClass& b, const CY3Context& ctx) {
  if (ctx.strict) {
    for (const NumClass* x : {&a, &b}) {
      if (!x->c1c2) throw Error(ErrorCode::LatticeViolation, "strict mode needs explicit c1c2 on " + x->str());
      if (!in_lattice(*x, ctx)) throw Error(ErrorCode::LatticeViolation, x->str() + " is off the lattice");
    }
  }
  Rational ra(a.r);
  Rational rb(b.r);
  Rational h3(ctx.h3);
  return ra * b.c3 - a.c3 * rb + (a.c2 * b.c1 - a.c1 * b.c2) / h3 +
         (ra * resolved_c1c2(b, ctx) - resolved_c1c2(a, ctx) * rb) / Rational(12);
}

Projection pi(const NumClass& v, const CY3Context& ctx) {
  if (v.r != 0) {
    Rational c0 = C0(v, ctx);
    return PlanePoint{v.c1 / c0, v.c2 / c0};
  }
  if (v.c1.is_zero()) throw Error(ErrorCode::UndefinedDirection, "rank 0 and c1 = 0 for " + v.str());
  return AtInfinity{v.c2 / v.c1};
}

PlanePoint pi_point(const NumClass& v, const CY3Context& ctx) {
  if (v.r == 0) throw Error(ErrorCode::RankZero, "projection of " + v.str() + " is at infinity");
  return std::get<PlanePoint>(pi(v, ctx));
}

PlanePoint pi_prime(const NumClass& v, const CY3Context& /*ctx*/) {
  if (v.c1.is_zero()) throw Error(ErrorCode::ZeroC1, "pi_prime needs c1 != 0, got " + v.str());
  return PlanePoint{Rational(2) * v.c2 / v.c1, Rational(3) * v.c3 / v.c1};
}

Normalized normalize_tH(const NumClass& v, const CY3Context& ctx) {
  if (v.r == 0) throw Error(ErrorCode::RankZero, "normalize_tH needs r != 0");
  Rational t = v.c1 / C0(v, ctx);
  return Normalized{t, twist(v, t, ctx)};
}

bool ch_H_proportional(const NumClass& a, const NumClass& b, const CY3Context& ctx) {
  Rational a0 = C0(a, ctx), b0 = C0(b, ctx);
  return a0 * b.c1 == a.c1 * b0 && a0 * b.c2 == a.c2 * b0 && a.c1 * b.c2 == a.c2 * b.c1;
}

}  // namespace wallcross
