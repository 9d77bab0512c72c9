#include <algorithm>

#include "wallcross/wallengine.hpp"

namespace wallcross {

namespace {

NumClass shifted_structure_sheaf(std::int64_t n, const CY3Context& ctx) {
  // class of O(-n)[1]
  return -line_bundle(-n, ctx);
}

bool safe_at(const NumClass& x, const PlanePoint& p, const CY3Context& ctx) {
  try {
    return in_safe_area(x, p.b, p.w, ctx);
  } catch (const Error&) {
    return false;
  }
}

bool below_line(const WallLine& l, const Rational& b, const Rational& w) {
  if (l.is_vertical()) return false;
  return w < l.w_at(b);
}

struct QuarticCoeffs {
  // f(c) = e4 c^4 + e3 c^3 + e2 c^2 + e1 c + e0
  Rational e4, e3, e2, e1, e0;

  Rational f(const Rational& c) const { return (((e4 * c + e3) * c + e2) * c + e1) * c + e0; }
  Surd df(const Surd& c) const {
    Surd d3(Rational(4) * e4), d2(Rational(3) * e3), d1(Rational(2) * e2), d0(e1);
    return ((d3 * c + d2) * c + d1) * c + d0;
  }
};

QuarticCoeffs quartic_coeffs(std::int64_t n_, const Rational& beta, const Rational& m, const CY3Context& ctx) {
  Rational n(n_), k(ctx.h3);
  Rational n2 = n * n, n3 = n2 * n, k2 = k * k;
  QuarticCoeffs q;
  q.e4 = Rational(-1, 4);
  q.e3 = n;
  q.e2 = Rational(-5, 4) * n2 - beta / (Rational(2) * k) + beta * beta / (Rational(4) * n2 * k2);
  q.e1 = n3 / Rational(2) + Rational(3) * n * beta / k + Rational(3) * beta * beta / (Rational(2) * n * k2) +
         Rational(6) * m / k;
  q.e0 = -(Rational(5) * beta * n2 / (Rational(2) * k) + Rational(6) * m * n / k +
           Rational(7) * beta * beta / (Rational(4) * k2));
  return q;
}

std::vector<Rational> corners(const Interval& iv) {
  if (iv.lo == iv.hi) return {iv.lo};
  return {iv.lo, iv.hi};
}

}  // namespace

void VnBounds::validate() const {
  if (r < 1) throw Error(ErrorCode::Precondition, "VnBounds.r must be >= 1");
  if (p1 < 0 || p2 < 0 || q < 0) throw Error(ErrorCode::Precondition, "VnBounds p1, p2, q must be >= 0");
}

VnBounds trivial_bounds(const NumClass& v) {
  if (!v.c1.is_zero()) throw Error(ErrorCode::Precondition, "trivial_bounds needs a normalized class, got " + v.str());
  VnBounds vb;
  vb.r = v.r;
  Rational beta = -v.c2, m = -v.c3;
  vb.p1 = std::max<long>(0, (-beta).ceil().get_si());
  vb.p2 = std::max<long>(0, beta.ceil().get_si());
  vb.q = std::max<long>(0, m.ceil().get_si());
  return vb;
}

FactorCheck is_typevn_factor(const NumClass& u, const VnBounds& vb, const CY3Context& ctx) {
  FactorCheck out;
  Rational ch0(u.r);
  out.ch2_lower = -Rational(2 * vb.p2 + 1) / Rational(vb.r) * ch0;
  if (u.r >= 1) {
    out.ch3_upper = Rational(2, 3) * u.c2 *
                    (ch0 * ch0 * u.c2 - Rational(1) / (Rational(2) * Rational(ctx.h3) * ch0 * ch0));
  }
  if (u.r < 1 || u.r > vb.r - 1) {
    out.failed = "ch0";
  } else if (!u.c1.is_zero()) {
    out.failed = "ch1";
  } else if (u.c2 < out.ch2_lower || u.c2.sign() > 0) {
    out.failed = "ch2";
  } else if (u.c3 > out.ch3_upper) {
    out.failed = "ch3";
  } else {
    out.ok = true;
  }
  return out;
}

std::set<WallType> classify_wall(const NumClass& v, const NumClass& v0, std::int64_t n, Wall& wall,
                                 const CY3Context& ctx, const std::optional<VnBounds>& vb_in) {
  if (!(make_vn(v0, n, ctx) == v)) {
    throw Error(ErrorCode::NotAVnClass, v.str() + " is not make_vn(" + v0.str() + ", " + std::to_string(n) + ")");
  }
  VnBounds vb = vb_in ? *vb_in : trivial_bounds(v0);
  NumClass rigid = shifted_structure_sheaf(n, ctx);
  std::optional<WallLine> js;
  try {
    js = ell_js(v0, n, ctx);
  } catch (const Error&) {
  }
  wall.classification.clear();
  for (Decomposition& d : wall.decompositions) {
    d.types.clear();
    if ((d.first == rigid || d.second == rigid) && js && *js == wall.line) d.types.insert(WallType::Type1);
    if (safe_at(d.first, wall.witness, ctx) && safe_at(d.second, wall.witness, ctx)) {
      d.types.insert(WallType::Type2a);
    }
    for (int side = 0; side < 2; ++side) {
      const NumClass& a = side == 0 ? d.first : d.second;
      const NumClass& b = side == 0 ? d.second : d.first;
      if (a.c1.is_zero() && a.r >= 1 && b.r <= v0.r - 2 && is_typevn_factor(a, vb, ctx).ok) {
        d.types.insert(WallType::Type2b);
      }
    }
    if (d.types.empty()) d.types.insert(WallType::Unclassified);
    wall.classification.insert(d.types.begin(), d.types.end());
  }
  return wall.classification;
}

Rational ch3_upper_bound(const NumClass& F, const CY3Context& ctx) {
  if (F.r <= 0 || !F.c1.is_zero()) throw Error(ErrorCode::Inapplicable, "ch3_upper_bound needs r > 0, c1 = 0");
  Rational r(F.r);
  return Rational(2, 3) * F.c2 * (r * F.c2 - Rational(1) / (Rational(2) * Rational(ctx.h3) * r * r));
}

Rational rank_minus1_lower_bound(const Rational& betaH, std::int64_t n, const CY3Context& ctx) {
  return -Rational(n) * betaH - Rational(2, 3) * betaH * (betaH - Rational(1) / (Rational(2) * Rational(ctx.h3)));
}

bool suggest_n_conditions(const NumClass& v, const VnBounds& vb, std::int64_t n, const CY3Context& ctx) {
  Rational eps = Rational(1) / (Rational(4) * Rational(vb.r) * Rational(vb.r) * Rational(ctx.h3));
  Rational b1 = Rational(-n) + eps, b2 = -eps;
  std::vector<NumClass> probes{v};
  for (const Rational& beta : {Rational(-vb.p1), Rational(vb.p2)}) {
    for (const Rational& m : {Rational(-vb.q), Rational(vb.q)}) probes.emplace_back(vb.r, 0, -beta, -m);
  }
  for (const NumClass& p : probes) {
    WallLine lf = WallLine::vertical(Rational(0));
    try {
      lf = ell_f(make_vn(p, n, ctx), ctx);
    } catch (const Error&) {
      return false;
    }
    if (!below_line(lf, b1, b1 * b1 / Rational(2)) || !below_line(lf, b2, b2 * b2 / Rational(2))) return false;
  }
  return true;
}

std::int64_t suggest_n(const NumClass& v, const VnBounds& vb, const CY3Context& ctx, std::int64_t ceiling) {
  vb.validate();
  if (v.r != vb.r) throw Error(ErrorCode::Precondition, "r(v) must equal vb.r");
  std::int64_t lo = 0, hi = 1;
  while (!suggest_n_conditions(v, vb, hi, ctx)) {
    if (hi >= ceiling) throw Error(ErrorCode::NoSuchN, "no n up to " + std::to_string(ceiling));
    lo = hi;
    hi = std::min(ceiling, hi * 2);
  }
  // lo fails (or is 0), hi passes
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (suggest_n_conditions(v, vb, mid, ctx)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Rational rank2_quartic(const Rational& c, std::int64_t n, const Rational& betaH, const Rational& m,
                       const CY3Context& ctx) {
  return quartic_coeffs(n, betaH, m, ctx).f(c);
}

QuarticCertificate rank2_no_wall_certificate(std::int64_t n, const Interval& betaH, const Interval& m,
                                             const CY3Context& ctx, const CertificateOptions& options) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be positive");
  if (betaH.lo > betaH.hi || m.lo > m.hi) throw Error(ErrorCode::Precondition, "reversed range");
  QuarticCertificate cert;
  Rational a = Rational(1) / Rational(ctx.h3);
  Rational z = Rational(n) - a;
  unsigned mesh = std::max(1u, options.mesh);
  auto record = [&](const Rational& c, const Rational& beta, const Rational& mm, const Rational& value,
                    const char* kind) {
    CertificatePoint p{c, beta, mm, value, kind};
    if (value.sign() <= 0 && !cert.violation) cert.violation = p;
    cert.points.push_back(std::move(p));
  };
  for (const Rational& beta : corners(betaH)) {
    for (const Rational& mm : corners(m)) {
      if (z < a) continue;
      QuarticCoeffs q = quartic_coeffs(n, beta, mm, ctx);
      record(a, beta, mm, q.f(a), "endpoint");
      if (z != a) record(z, beta, mm, q.f(z), "endpoint");
      for (unsigned i = 1; i < mesh; ++i) {
        Rational c = a + (z - a) * Rational(i) / Rational(mesh);
        record(c, beta, mm, q.f(c), "mesh");
      }
      // f'' = 12 e4 c^2 + 6 e3 c + 2 e2 vanishes at the ends of the monotone pieces of f'
      std::vector<Surd> cuts{Surd(a)};
      for (const Surd& s : quadratic_roots(Rational(12) * q.e4, Rational(6) * q.e3, Rational(2) * q.e2).roots) {
        if (Surd(a) < s && s < Surd(z)) cuts.push_back(s);
      }
      cuts.push_back(Surd(z));
      Rational tol = Rational(n) / Rational(Integer(Integer(1) << options.bracket_bits));
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Surd lo = cuts[i], hi = cuts[i + 1];
        Surd dlo = q.df(lo), dhi = q.df(hi);
        if (dlo.sign() * dhi.sign() > 0) continue;
        // f' is monotone on [lo, hi] and changes sign: bisect to a rational bracket
        Rational root_lo, root_hi;
        bool exact = false;
        if (dlo.sign() == 0 && lo.is_rational()) {
          root_lo = root_hi = lo.as_rational();
          exact = true;
        } else if (dhi.sign() == 0 && hi.is_rational()) {
          root_lo = root_hi = hi.as_rational();
          exact = true;
        }
        int slo = dlo.sign() != 0 ? dlo.sign() : -dhi.sign();
        while (!exact) {
          Rational mid = (lo.is_rational() && hi.is_rational())
                             ? (lo.as_rational() + hi.as_rational()) / Rational(2)
                             : rational_between((Surd(3) * lo + hi) / Surd(4), (lo + Surd(3) * hi) / Surd(4));
          int sm = q.df(Surd(mid)).sign();
          if (sm == 0) {
            root_lo = root_hi = mid;
            exact = true;
            break;
          }
          if (sm == slo) {
            lo = Surd(mid);
          } else {
            hi = Surd(mid);
          }
          if (lo.is_rational() && hi.is_rational() && hi.as_rational() - lo.as_rational() <= tol) {
            root_lo = lo.as_rational();
            root_hi = hi.as_rational();
            break;
          }
        }
        if (root_lo == root_hi) {
          record(root_lo, beta, mm, q.f(root_lo), "critical");
          continue;
        }
        Rational mid = (root_lo + root_hi) / Rational(2);
        Rational m1 = max(q.df(Surd(root_lo)).as_rational().abs(), q.df(Surd(root_hi)).as_rational().abs());
        record(mid, beta, mm, q.f(mid) - (root_hi - root_lo) / Rational(2) * m1, "critical");
      }
    }
  }
  cert.passed = !cert.violation.has_value();
  return cert;
}

Rational rank0_ch3_bound(const NumClass& F, const CY3Context& ctx) {
  if (F.r != 0 || F.c1.sign() <= 0) throw Error(ErrorCode::Inapplicable, "rank0_ch3_bound needs r = 0, c1 > 0");
  Rational h3(ctx.h3);
  Rational x = F.c1 / h3;
  return F.c2 * F.c2 / (Rational(2) * F.c1) + h3 / Rational(24) * x * x * x;
}

}  // namespace wallcross
