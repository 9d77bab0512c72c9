#include "wallcross/wallengine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <map>
#include <mutex>
#include <thread>

namespace wallcross {

namespace {

Surd sqrt_of(const Rational& x) {
  if (x.sign() < 0) throw Error(ErrorCode::Precondition, "square root of a negative rational");
  if (x.is_zero()) return Surd(0);
  return Surd(Rational(0), Rational(Integer(1), x.den()), x.num() * x.den());
}

// Value of A*w + B*b + C for the BG form coefficients at a surd point.
Surd bg_at(const BgLinear& k, const Surd& b, const Surd& w) {
  return Surd(Rational(2)) * (Surd(k.coeff_w) * w + Surd(k.coeff_b) * b + Surd(k.constant));
}

// ch1^{bH}.H^2 = c1 - b*C0
Surd tilt_c1(const NumClass& x, const Surd& b, const CY3Context& ctx) {
  return Surd(x.c1) - b * Surd(C0(x, ctx));
}

Integer lattice_floor(const Surd& x, std::int64_t d) { return (x * Surd(Rational(d))).floor(); }
Integer lattice_ceil(const Surd& x, std::int64_t d) { return (x * Surd(Rational(d))).ceil(); }

Rational lattice_value(const Integer& k, std::int64_t d) { return Rational(k, Integer(static_cast<long>(d))); }

Integer ifloor(const Rational& x, std::int64_t d) { return (x * Rational(d)).floor(); }
Integer iceil(const Rational& x, std::int64_t d) { return (x * Rational(d)).ceil(); }

std::pair<NumClass, NumClass> canonical_pair(const NumClass& a, const NumClass& b) {
  if (b < a) return {b, a};
  return {a, b};
}

struct Candidate {
  NumClass u;
  AcceptedPart part;
};

// Points of the bounded set box ∩ closure(U) that decide extremes of linear
// and linear-fractional functions over it: corners of the box inside
// closure(U), and box edges meeting the parabola.
struct Corner {
  Surd b, w;
};

std::vector<Corner> region_corners(const Region& reg) {
  std::vector<Corner> out;
  auto on_box_w = [&](const Surd& w) { return Surd(reg.w_lo) <= w && w <= Surd(reg.w_hi); };
  auto on_box_b = [&](const Surd& b) { return Surd(reg.b_lo) <= b && b <= Surd(reg.b_hi); };
  for (const Rational& b : {reg.b_lo, reg.b_hi}) {
    for (const Rational& w : {reg.w_lo, reg.w_hi}) {
      if (w >= b * b / Rational(2)) out.push_back({Surd(b), Surd(w)});
    }
    Surd pw(b * b / Rational(2));
    if (on_box_w(pw)) out.push_back({Surd(b), pw});
  }
  for (const Rational& w : {reg.w_lo, reg.w_hi}) {
    if (w.sign() < 0) continue;
    Surd root = sqrt_of(Rational(2) * w);
    for (const Surd& b : {root, -root}) {
      if (on_box_b(b)) out.push_back({b, Surd(w)});
    }
  }
  return out;
}

bool point_in_box(const Region& reg, const Surd& b, const Surd& w) {
  return Surd(reg.b_lo) <= b && b <= Surd(reg.b_hi) && Surd(reg.w_lo) <= w && w <= Surd(reg.w_hi);
}

// Lower bound for the squared b-width of every chord through U that a wall
// for v inside the region can have. Walls for v pass through Pi(v) (or run
// parallel to its direction when r = 0); the chord width only degenerates
// near the tangent point of that pencil. nullopt when no line of the pencil
// meets the region inside U.
std::optional<Rational> chord_width2_lower(const NumClass& v, const Region& region, const CY3Context& ctx) {
  constexpr unsigned kBits[] = {64, 128, 256, 512};
  if (v.r != 0) {
    PlanePoint P = pi_point(v, ctx);
    Region reg = region;
    Rational p = P.b;
    if (v.r < 0) {
      // walls come from the right of Pi(v); reflect b -> -b
      p = -p;
      reg.b_lo = -region.b_hi;
      reg.b_hi = -region.b_lo;
    }
    Rational q = P.w;
    Rational dprime = p * p - Rational(2) * q;
    Surd tangent_b = Surd(p) - sqrt_of(dprime);
    Surd tangent_w = tangent_b * tangent_b / Surd(Rational(2));
    if (point_in_box(reg, tangent_b, tangent_w)) {
      throw Error(ErrorCode::UnboundedSearch, "r: the tangent point of the wall pencil lies in the region");
    }
    std::vector<Surd> sigmas;
    for (const Corner& c : region_corners(reg)) {
      if (!(c.b < Surd(p))) continue;
      sigmas.push_back((c.w - Surd(q)) / (c.b - Surd(p)));
    }
    if (sigmas.empty()) return std::nullopt;
    Surd tangent_slope = tangent_b;  // slope of the tangent line at T equals b_T
    for (unsigned bits : kBits) {
      Rational s_hi;
      bool first = true;
      for (const Surd& s : sigmas) {
        Rational up = rational_upper(s, bits);
        if (first || up > s_hi) s_hi = up;
        first = false;
      }
      if (Surd(s_hi) < tangent_slope) {
        Rational gap = p - s_hi;
        return Rational(4) * (gap * gap - dprime);
      }
    }
    throw Error(ErrorCode::UnboundedSearch, "r: walls accumulate at the tangent point of the pencil");
  }
  // rank 0, c1 > 0: fixed slope s0, chords w = s0*b + t with half-width^2 = s0^2 + 2t
  Rational s0 = v.c2 / v.c1;
  Rational tb = s0, tw = s0 * s0 / Rational(2);
  if (point_in_box(region, Surd(tb), Surd(tw))) {
    throw Error(ErrorCode::UnboundedSearch, "r: the tangent point of the wall direction lies in the region");
  }
  std::vector<Surd> ts;
  for (const Corner& c : region_corners(region)) ts.push_back(c.w - Surd(s0) * c.b);
  if (ts.empty()) return std::nullopt;
  for (unsigned bits : kBits) {
    Rational t_lo;
    bool first = true;
    for (const Surd& t : ts) {
      Rational lo = rational_lower(t, bits);
      if (first || lo < t_lo) t_lo = lo;
      first = false;
    }
    Rational half2 = s0 * s0 + Rational(2) * t_lo;
    if (half2.sign() > 0) return Rational(4) * half2;
  }
  throw Error(ErrorCode::UnboundedSearch, "r: walls accumulate at the tangent point of the direction");
}

// Rank-0 v with slope s0 = c2/c1: a wall w = s0*b + t through Pi(u) has
// tau = s0^2 + 2t > 0 with tau*C0u in (1/N)Z, and the heart at the chord
// ends gives |C0u|*2*sqrt(tau) <= c1(v). Together |C0u| <= c1(v)^2 * N / 4.
Rational rank0_lattice_bound(const NumClass& v, const CY3Context& ctx) {
  Rational s0 = v.c2 / v.c1;
  Integer n = (s0 * s0 * Rational(ctx.h3)).den();
  for (const Rational& x : {Rational(2, ctx.lattice[1]), Rational(2) * s0 / Rational(ctx.lattice[0])}) {
    n = lcm(n, x.den());
  }
  return v.c1 * v.c1 * Rational(n) / Rational(4);
}

// Interval of values taken by lambda*(X - y*C0v) + y*C0u over lambda in [0,1]
// and y in [y_lo, y_hi]; the extremes sit at the corners.
std::pair<Rational, Rational> bilinear_range(const Rational& X, const Rational& c0v, const Rational& c0u,
                                             const Rational& y_lo, const Rational& y_hi) {
  std::vector<Rational> vals;
  for (const Rational& y : {y_lo, y_hi}) {
    vals.push_back(y * c0u);
    vals.push_back(X + y * (c0u - c0v));
  }
  return {*std::min_element(vals.begin(), vals.end()), *std::max_element(vals.begin(), vals.end())};
}

// Narrows [lo, hi] to the c2x allowed by 0 <= Delta(x) <= Delta(v) for
// x = (c0x, c1x, c2x); false when nothing is left.
bool delta_prune(const Rational& c0x, const Rational& c1x, const Rational& dv, Rational& lo, Rational& hi) {
  if (c0x.is_zero()) return c1x * c1x <= dv;
  Rational a = c1x * c1x / (Rational(2) * c0x);
  Rational b = (c1x * c1x - dv) / (Rational(2) * c0x);
  Rational x_lo = min(a, b), x_hi = max(a, b);
  lo = max(lo, x_lo);
  hi = min(hi, x_hi);
  return lo <= hi;
}

struct SearchPlan {
  bool empty = false;
  Region region;
  std::vector<std::int64_t> ranks;
  Interval c1_y;  // b-range of witness positions
  Interval c2_y;  // w-range of witness positions
};

SearchPlan plan_search(const NumClass& v, const Region& region, const CY3Context& ctx) {
  ctx.validate();
  region.validate();
  if (v.r == 0 && v.c1.is_zero() && v.c2.is_zero()) {
    throw Error(ErrorCode::Precondition, "ch_H(v) must be nonzero");
  }
  Rational dv = delta_H(v, ctx);
  if (dv.sign() < 0) throw Error(ErrorCode::Precondition, "Delta_H(v) < 0 for " + v.str());
  SearchPlan plan;
  plan.region = region;
  // X_v > 0 is impossible everywhere, or the only candidate lines are proportional
  if (dv.is_zero() || (v.r == 0 && v.c1.sign() <= 0)) {
    plan.empty = true;
    return plan;
  }
  // bound on |C0u - lambda*C0v|
  std::optional<Rational> m_up;
  if (v.r == 0) m_up = rank0_lattice_bound(v, ctx);
  try {
    auto width2 = chord_width2_lower(v, region, ctx);
    if (!width2) {
      plan.empty = true;
      return plan;
    }
    // |C0u - lambda*C0v| <= sqrt(Delta_v)/L
    Rational m = sqrt_upper(dv / *width2, 32) + Rational(1, 1 << 20);
    if (!m_up || m < *m_up) m_up = m;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnboundedSearch || !m_up) throw;
  }
  Rational c0v = C0(v, ctx);
  Rational lo = min(Rational(0), c0v) - *m_up;
  Rational hi = max(Rational(0), c0v) + *m_up;
  Rational h3(ctx.h3);
  Integer r_lo = (lo / h3).ceil(), r_hi = (hi / h3).floor();
  if (!r_lo.fits_slong_p() || !r_hi.fits_slong_p() || r_hi - r_lo > 100000000) {
    throw Error(ErrorCode::UnboundedSearch, "r: rank range too large");
  }
  for (long r = r_lo.get_si(); r <= r_hi.get_si(); ++r) plan.ranks.push_back(r);

  Rational b_lo = region.b_lo, b_hi = region.b_hi;
  if (v.r > 0) b_hi = min(b_hi, v.c1 / c0v);
  if (v.r < 0) b_lo = max(b_lo, v.c1 / c0v);
  plan.c1_y = {b_lo, b_hi};
  plan.c2_y = {max(region.w_lo, Rational(0)), region.w_hi};
  return plan;
}

// All accepted candidates u in one rank slice.
void scan_rank(const NumClass& v, std::int64_t r, const SearchPlan& plan, const CY3Context& ctx,
               std::vector<Candidate>& out) {
  Rational dv = delta_H(v, ctx);
  Rational c0v = C0(v, ctx);
  Rational c0u = Rational(r) * Rational(ctx.h3);
  Rational c0w = c0v - c0u;
  auto [c1_lo, c1_hi] = bilinear_range(v.c1, c0v, c0u, plan.c1_y.lo, plan.c1_y.hi);
  auto [c2_lo0, c2_hi0] = bilinear_range(v.c2, c0v, c0u, plan.c2_y.lo, plan.c2_y.hi);
  const auto& d = ctx.lattice;
  for (Integer k1 = iceil(c1_lo, d[0]); k1 <= ifloor(c1_hi, d[0]); ++k1) {
    Rational c1 = lattice_value(k1, d[0]);
    Rational c2_lo = c2_lo0, c2_hi = c2_hi0;
    if (!delta_prune(c0u, c1, dv, c2_lo, c2_hi)) continue;
    // complement: c2w = c2v - c2u
    Rational w_lo = v.c2 - c2_hi, w_hi = v.c2 - c2_lo;
    if (!delta_prune(c0w, v.c1 - c1, dv, w_lo, w_hi)) continue;
    c2_lo = max(c2_lo, v.c2 - w_hi);
    c2_hi = min(c2_hi, v.c2 - w_lo);
    for (Integer k2 = iceil(c2_lo, d[1]); k2 <= ifloor(c2_hi, d[1]); ++k2) {
      NumClass u(r, c1, lattice_value(k2, d[1]), Rational(0));
      NumClass w = v - u;
      w.c1c2.reset();
      Rational du = delta_H(u, ctx), dw = delta_H(w, ctx);
      if (du.sign() < 0 || dw.sign() < 0 || !(du < dv) || !(dw < dv)) continue;
      auto line = wall_line(u, v, ctx);
      if (!line) continue;
      auto seg = wall_segment(*line, plan.region);
      if (!seg) continue;
      bool heart = true;
      for (const Surd& e : {seg->chord_lo, seg->chord_hi}) {
        if (tilt_c1(u, e, ctx).sign() < 0 || tilt_c1(w, e, ctx).sign() < 0) heart = false;
      }
      if (!heart) continue;
      if (tilt_c1(v, Surd(seg->witness.b), ctx).sign() <= 0) continue;

      // B(x) = B0(x) - 6*c3(x)*X(x) at the witness and both chord ends.
      std::vector<Corner> pts{{Surd(seg->witness.b), Surd(seg->witness.w)}};
      for (const Surd& e : {seg->chord_lo, seg->chord_hi}) pts.push_back({e, e * e / Surd(Rational(2))});
      BgLinear ku = bg_linear_coeffs(u, ctx), kw = bg_linear_coeffs(NumClass(w.r, w.c1, w.c2, 0), ctx);
      std::optional<Integer> u_up, w_up;
      bool feasible = true;
      for (const Corner& pt : pts) {
        for (int side = 0; side < 2 && feasible; ++side) {
          const NumClass& x = side == 0 ? u : w;
          const BgLinear& k = side == 0 ? ku : kw;
          Surd X = tilt_c1(x, pt.b, ctx);
          Surd B0 = bg_at(k, pt.b, pt.w);
          auto& up = side == 0 ? u_up : w_up;
          if (X.sign() == 0) {
            if (B0.sign() < 0) feasible = false;
            continue;
          }
          Surd c3_max = B0 / (Surd(Rational(6)) * X);
          // c3u <= c3_max for u; c3u >= c3v - c3_max for the complement
          Integer bound = side == 0 ? lattice_floor(c3_max, d[2]) : -lattice_ceil(Surd(v.c3) - c3_max, d[2]);
          if (!up || bound < *up) up = bound;
        }
      }
      if (!feasible) continue;
      if (!u_up || !w_up) {
        throw Error(ErrorCode::UnboundedSearch, "c3: the BG form does not bound ch3 for " + u.str());
      }
      // c3u <= u_up/d3 and c3u >= -w_up/d3
      Integer k3_hi = *u_up;
      Integer k3_lo = -*w_up;
      if (k3_hi - k3_lo > 10000000) {
        throw Error(ErrorCode::UnboundedSearch, "c3: range too large for " + u.str());
      }
      for (Integer k3 = k3_lo; k3 <= k3_hi; ++k3) {
        NumClass uc(r, u.c1, u.c2, lattice_value(k3, d[2]));
        if (uc.is_zero() || uc == v) continue;
        // the final predicate pass is the shared one
        auto accepted = check_decomposition(v, uc, plan.region, ctx);
        if (accepted) out.push_back({uc, *accepted});
      }
    }
  }
}

std::vector<Wall> merge(const NumClass& v, std::vector<Candidate> cands) {
  std::map<std::array<Integer, 3>, Wall> by_line;
  for (Candidate& c : cands) {
    auto key = c.part.line.triple();
    auto it = by_line.find(key);
    if (it == by_line.end()) {
      Wall w;
      w.line = c.part.line;
      w.witness = c.part.witness;
      it = by_line.emplace(key, std::move(w)).first;
    }
    auto [a, b] = canonical_pair(c.u, v - c.u);
    a.c1c2.reset();
    b.c1c2.reset();
    it->second.decompositions.push_back(Decomposition{a, b, {}});
  }
  std::vector<Wall> walls;
  for (auto& [key, w] : by_line) {
    auto& ds = w.decompositions;
    std::sort(ds.begin(), ds.end(), [](const Decomposition& x, const Decomposition& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second < y.second;
    });
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    walls.push_back(std::move(w));
  }
  std::sort(walls.begin(), walls.end(), [](const Wall& x, const Wall& y) { return slope_order(x.line, y.line); });
  return walls;
}

}  // namespace

void Region::validate() const {
  if (b_lo > b_hi || w_lo > w_hi) throw Error(ErrorCode::InvalidRegion, "region bounds are reversed");
  Rational min_b2 = (b_lo.sign() <= 0 && b_hi.sign() >= 0) ? Rational(0) : min(b_lo * b_lo, b_hi * b_hi);
  if (!(w_hi > min_b2 / Rational(2))) throw Error(ErrorCode::InvalidRegion, "region misses U");
}

Integer LatticeBox::count(const CY3Context& ctx) const {
  auto span = [](const Interval& iv, std::int64_t d) {
    Integer n = ifloor(iv.hi, d) - iceil(iv.lo, d) + 1;
    return n < 0 ? Integer(0) : n;
  };
  return span(r, 1) * span(c1, ctx.lattice[0]) * span(c2, ctx.lattice[1]) * span(c3, ctx.lattice[2]);
}

std::string_view wall_type_name(WallType t) {
  switch (t) {
    case WallType::Type1: return "Type1";
    case WallType::Type2a: return "Type2a";
    case WallType::Type2b: return "Type2b";
    case WallType::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

WallType parse_wall_type(std::string_view name) {
  for (WallType t : {WallType::Type1, WallType::Type2a, WallType::Type2b, WallType::Unclassified}) {
    if (wall_type_name(t) == name) return t;
  }
  throw Error(ErrorCode::ParseError, "unknown wall type '" + std::string(name) + "'");
}

std::optional<WallSegment> wall_segment(const WallLine& line, const Region& region) {
  if (line.is_vertical()) return std::nullopt;
  BoundaryIntersection bi = intersect_boundary(line);
  if (bi.kind != BoundaryIntersection::Kind::TwoPoints) return std::nullopt;
  Rational s = line.slope(), t = line.intercept();
  Rational lo = region.b_lo, hi = region.b_hi;
  if (s.is_zero()) {
    if (t < region.w_lo || t > region.w_hi) return std::nullopt;
  } else {
    Rational x1 = (region.w_lo - t) / s, x2 = (region.w_hi - t) / s;
    lo = max(lo, min(x1, x2));
    hi = min(hi, max(x1, x2));
  }
  WallSegment seg;
  seg.chord_lo = bi.a;
  seg.chord_hi = bi.b;
  seg.seg_lo = max(Surd(lo), bi.a);
  seg.seg_hi = min(Surd(hi), bi.b);
  Rational wb;
  if (seg.seg_hi < seg.seg_lo) return std::nullopt;
  if (seg.seg_lo == seg.seg_hi) {
    if (!(bi.a < seg.seg_lo && seg.seg_lo < bi.b)) return std::nullopt;
    wb = seg.seg_lo.as_rational();
  } else {
    Surd mid = (seg.seg_lo + seg.seg_hi) / Surd(Rational(2));
    if (mid.is_rational()) {
      wb = mid.as_rational();
    } else {
      Surd three(Rational(3)), four(Rational(4));
      wb = rational_between((three * seg.seg_lo + seg.seg_hi) / four, (seg.seg_lo + three * seg.seg_hi) / four);
    }
  }
  seg.witness = PlanePoint{wb, line.w_at(wb)};
  return seg;
}

std::optional<AcceptedPart> check_decomposition(const NumClass& v, const NumClass& u, const Region& region,
                                                const CY3Context& ctx) {
  if (u.is_zero() || u == v) return std::nullopt;
  NumClass w = v - u;
  Rational dv = delta_H(v, ctx), du = delta_H(u, ctx), dw = delta_H(w, ctx);
  if (du.sign() < 0 || dw.sign() < 0) return std::nullopt;
  bool proportional = ch_H_proportional(u, v, ctx);
  if (proportional ? (du > dv || dw > dv) : !(du < dv && dw < dv)) return std::nullopt;
  // proportional classes have the same slope everywhere and fix no line
  auto line = wall_line(u, v, ctx);
  if (!line) return std::nullopt;
  auto seg = wall_segment(*line, region);
  if (!seg) return std::nullopt;
  for (const Surd& e : {seg->chord_lo, seg->chord_hi}) {
    if (tilt_c1(u, e, ctx).sign() < 0 || tilt_c1(w, e, ctx).sign() < 0) return std::nullopt;
  }
  const PlanePoint& wit = seg->witness;
  if (tilt_c1(v, Surd(wit.b), ctx).sign() <= 0) return std::nullopt;
  BgLinear ku = bg_linear_coeffs(u, ctx), kw = bg_linear_coeffs(w, ctx);
  std::vector<Corner> pts{{Surd(wit.b), Surd(wit.w)}};
  for (const Surd& e : {seg->chord_lo, seg->chord_hi}) pts.push_back({e, e * e / Surd(Rational(2))});
  for (const Corner& pt : pts) {
    if (bg_at(ku, pt.b, pt.w).sign() < 0 || bg_at(kw, pt.b, pt.w).sign() < 0) return std::nullopt;
  }
  return AcceptedPart{*line, wit};
}

LatticeBox search_box(const NumClass& v, const Region& region, const CY3Context& ctx) {
  SearchPlan plan = plan_search(v, region, ctx);
  LatticeBox box{{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  if (plan.empty || plan.ranks.empty()) return box;
  bool first_c1 = true, first_c3 = true;
  box.r = {Rational(plan.ranks.front()), Rational(plan.ranks.back())};
  Rational c0v = C0(v, ctx);
  for (std::int64_t r : plan.ranks) {
    Rational c0u = Rational(r) * Rational(ctx.h3);
    auto [c1_lo, c1_hi] = bilinear_range(v.c1, c0v, c0u, plan.c1_y.lo, plan.c1_y.hi);
    auto [c2_lo, c2_hi] = bilinear_range(v.c2, c0v, c0u, plan.c2_y.lo, plan.c2_y.hi);
    if (first_c1) {
      box.c1 = {c1_lo, c1_hi};
      box.c2 = {c2_lo, c2_hi};
      first_c1 = false;
    } else {
      box.c1 = {min(box.c1.lo, c1_lo), max(box.c1.hi, c1_hi)};
      box.c2 = {min(box.c2.lo, c2_lo), max(box.c2.hi, c2_hi)};
    }
    std::vector<Candidate> cands;
    scan_rank(v, r, plan, ctx, cands);
    for (const Candidate& c : cands) {
      if (first_c3) {
        box.c3 = {c.u.c3, c.u.c3};
        first_c3 = false;
      } else {
        box.c3 = {min(box.c3.lo, c.u.c3), max(box.c3.hi, c.u.c3)};
      }
    }
  }
  return box;
}

std::vector<Wall> enumerate_walls(const NumClass& v, const Region& region, const CY3Context& ctx,
                                  const EngineOptions& options) {
  SearchPlan plan = plan_search(v, region, ctx);
  if (plan.empty) return {};
  unsigned workers = std::max(1u, std::min<unsigned>(options.threads, plan.ranks.size()));
  std::vector<std::vector<Candidate>> slices(plan.ranks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < plan.ranks.size(); i = next++) {
      try {
        scan_rank(v, plan.ranks[i], plan, ctx, slices[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Candidate> all;
  for (auto& s : slices) std::move(s.begin(), s.end(), std::back_inserter(all));
  return merge(v, std::move(all));
}

std::vector<Wall> brute_force_walls(const NumClass& v, const Region& region, const LatticeBox& box,
                                    const CY3Context& ctx) {
  const auto& d = ctx.lattice;
  std::vector<Candidate> cands;
  for (Integer r = iceil(box.r.lo, 1); r <= ifloor(box.r.hi, 1); ++r) {
    for (Integer k1 = iceil(box.c1.lo, d[0]); k1 <= ifloor(box.c1.hi, d[0]); ++k1) {
      for (Integer k2 = iceil(box.c2.lo, d[1]); k2 <= ifloor(box.c2.hi, d[1]); ++k2) {
        for (Integer k3 = iceil(box.c3.lo, d[2]); k3 <= ifloor(box.c3.hi, d[2]); ++k3) {
          NumClass u(r.get_si(), lattice_value(k1, d[0]), lattice_value(k2, d[1]), lattice_value(k3, d[2]));
          auto accepted = check_decomposition(v, u, region, ctx);
          if (accepted) cands.push_back({u, *accepted});
        }
      }
    }
  }
  return merge(v, std::move(cands));
}

}  // namespace wallcross
