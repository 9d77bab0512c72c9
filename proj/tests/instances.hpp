#pragma once

// Oracle instances for the wall engine. Regions avoid the tangent point of
// the wall pencil so that the rank range is finite.

#include <optional>
#include <string>
#include <vector>

#include "wallcross/wallengine.hpp"

namespace wallcross::testing {

struct OracleInstance {
  std::string name;
  CY3Context ctx;
  NumClass v;
  Region region;
};

inline CY3Context plain_context(std::int64_t h3, Rational c2h = Rational(0)) {
  CY3Context c;
  c.h3 = h3;
  c.c2h = c2h;
  return c;
}

inline Region box(Rational b_lo, Rational b_hi, Rational w_lo, Rational w_hi) {
  return Region{b_lo, b_hi, w_lo, w_hi};
}

inline std::vector<OracleInstance> oracle_instances() {
  CY3Context h1 = plain_context(1), h2 = plain_context(2), q = quintic_context();
  std::vector<OracleInstance> out{
      {"rank0 (0,2,0,0)", h1, NumClass(0, 2, 0, 0), box(-2, 2, 0, 4)},
      {"rank0 (0,3,1,0)", h1, NumClass(0, 3, 1, 0), box(-2, 2, Rational(1, 4), 4)},
      {"rank0 (0,2,1,0)", h1, NumClass(0, 2, 1, 0), box(-2, 3, 0, 5)},
      {"rank0 (0,3,0,1)", h1, NumClass(0, 3, 0, 1), box(-2, 2, 0, 3)},
      {"rank0 (0,4,-2,0)", h1, NumClass(0, 4, -2, 0), box(-2, 1, 0, 2)},
      {"rank0 h3=2 (0,4,0,0)", h2, NumClass(0, 4, 0, 0), box(-2, 2, Rational(1, 2), 4)},
      {"rank1 (1,0,-1,0) near b=-1", h1, NumClass(1, 0, -1, 0), box(Rational(-6, 5), Rational(-4, 5), 0, 4)},
      {"rank1 (1,0,-1,0) right", h1, NumClass(1, 0, -1, 0), box(-1, 0, 1, 4)},
      {"rank1 h3=2 (1,0,-1,0)", h2, NumClass(1, 0, -1, 0), box(-2, -1, 1, 3)},
      {"rank2 (2,0,-1,0)", h1, NumClass(2, 0, -1, 0), box(-2, -1, 1, 3)},
      {"rank2 (2,1,-1,0)", h1, NumClass(2, 1, -1, 0), box(-2, 0, Rational(1, 2), 3)},
      {"v_n of O, n=2, h3=1", h1, make_vn(NumClass(1, 0, 0, 0), 2, h1), box(-3, -1, 1, 6)},
      {"v_n of O, n=4, h3=1", h1, make_vn(NumClass(1, 0, 0, 0), 4, h1), box(-5, -1, 1, 12)},
      {"v_n of I_1, n=2, h3=1", h1, make_vn(NumClass(1, 0, 0, -1), 2, h1), box(-3, -1, 1, 6)},
      {"v_n of O, n=1, h3=2", h2, make_vn(NumClass(1, 0, 0, 0), 1, h2), box(-2, 0, 0, 3)},
      {"quintic v_n of O, n=2", q, make_vn(NumClass(1, 0, 0, 0), 2, q), box(-3, -1, 1, 6)},
      {"quintic v_n of O, n=1", q, make_vn(NumClass(1, 0, 0, 0), 1, q), box(-2, 0, 0, 3)},
      {"quintic rank0 (0,5,0,0)", q, NumClass(0, 5, 0, 0), box(-2, 2, Rational(1, 4), 3)},
      {"quintic (1,0,-1,0)", q, NumClass(1, 0, -1, 0), box(-2, -1, 1, 3)},
      {"quintic (0,5,-5,0)", q, NumClass(0, 5, -5, 0), box(-3, 0, 1, 5)},
      {"rank -1 (-1,0,1,0)", h1, NumClass(-1, 0, 1, 0), box(Rational(1, 2), 2, Rational(3, 2), 3)},
      {"Delta zero (1,0,0,0)", h1, NumClass(1, 0, 0, 0), box(-2, 2, 0, 4)},
  };
  return out;
}

// The engine's search box padded by `margin` lattice steps per coordinate.
inline LatticeBox padded_box(const LatticeBox& b, const CY3Context& ctx, std::int64_t margin) {
  LatticeBox out = b;
  Rational m(margin);
  out.r = {b.r.lo - m, b.r.hi + m};
  out.c1 = {b.c1.lo - m / Rational(ctx.lattice[0]), b.c1.hi + m / Rational(ctx.lattice[0])};
  out.c2 = {b.c2.lo - m / Rational(ctx.lattice[1]), b.c2.hi + m / Rational(ctx.lattice[1])};
  out.c3 = {b.c3.lo - m / Rational(ctx.lattice[2]), b.c3.hi + m / Rational(ctx.lattice[2])};
  return out;
}

}  // namespace wallcross::testing
