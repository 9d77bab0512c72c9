#pragma once

// Numerical classes (ch0, ch1.H^2, ch2.H, ch3) on a polarized Calabi-Yau
// threefold and the pointwise formulas on them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "wallcross/exactnum.hpp"

namespace wallcross {

struct CY3Context {
  std::int64_t h3 = 1;
  Rational c2h;
  std::int64_t torsion = 1;
  std::array<std::int64_t, 3> lattice{1, 1, 1};
  // Strict mode: classes must carry an explicit c1c2 and lie on the lattice
  // whenever the Euler pairing is evaluated.
  bool strict = false;

  void validate() const;
  friend bool operator==(const CY3Context&, const CY3Context&) = default;
};

CY3Context quintic_context();

struct NumClass {
  std::int64_t r = 0;
  Rational c1;
  Rational c2;
  Rational c3;
  std::optional<Rational> c1c2;

  NumClass() = default;
  NumClass(std::int64_t r_, Rational c1_, Rational c2_, Rational c3_,
           std::optional<Rational> c1c2_ = std::nullopt)
      : r(r_), c1(std::move(c1_)), c2(std::move(c2_)), c3(std::move(c3_)), c1c2(std::move(c1c2_)) {}

  bool is_zero() const { return r == 0 && c1.is_zero() && c2.is_zero() && c3.is_zero(); }
  std::string str() const;

  NumClass& operator+=(const NumClass& o);
  NumClass& operator-=(const NumClass& o);
  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator-(const NumClass& a);
  friend NumClass operator*(const Rational& k, const NumClass& a);

  // Equality and order look at (r, c1, c2, c3) only.
  friend bool operator==(const NumClass& a, const NumClass& b) {
    return a.r == b.r && a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
  }
  friend std::strong_ordering operator<=>(const NumClass& a, const NumClass& b);
};

// The coordinates C_i = ch_i.H^{3-i}.
Rational C0(const NumClass& v, const CY3Context& ctx);

// Either a finite value or +infinity.
struct Slope {
  bool infinite = false;
  Rational value;

  static Slope inf() { return Slope{true, Rational(0)}; }
  static Slope of(Rational v) { return Slope{false, std::move(v)}; }
  std::string str() const { return infinite ? "+inf" : value.str(); }
  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

struct PlanePoint {
  Rational b;
  Rational w;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

struct AtInfinity {
  Rational slope;
  friend bool operator==(const AtInfinity&, const AtInfinity&) = default;
};

using Projection = std::variant<PlanePoint, AtInfinity>;

NumClass structure_sheaf();
// ch(O(n)) = e^{nH}.
NumClass line_bundle(std::int64_t n, const CY3Context& ctx);

NumClass twist(const NumClass& v, const Rational& b, const CY3Context& ctx);
NumClass make_vn(const NumClass& v, std::int64_t n, const CY3Context& ctx);
Rational delta_H(const NumClass& v, const CY3Context& ctx);
Slope mu_H(const NumClass& v, const CY3Context& ctx);
Slope nu(const NumClass& v, const Rational& b, const Rational& w, const CY3Context& ctx);
Rational bg_form(const NumClass& v, const Rational& b, const Rational& w, const CY3Context& ctx);

struct BgLinear {
  Rational coeff_w;
  Rational coeff_b;
  Rational constant;
  bool is_zero() const { return coeff_w.is_zero() && coeff_b.is_zero() && constant.is_zero(); }
  friend bool operator==(const BgLinear&, const BgLinear&) = default;
};
BgLinear bg_linear_coeffs(const NumClass& v, const CY3Context& ctx);

Rational resolved_c1c2(const NumClass& v, const CY3Context& ctx);
bool in_lattice(const NumClass& v, const CY3Context& ctx);
Rational euler_pairing(const NumClass& a, const NumClass& b, const CY3Context& ctx);

Projection pi(const NumClass& v, const CY3Context& ctx);
PlanePoint pi_point(const NumClass& v, const CY3Context& ctx);  // throws RankZero when r = 0
PlanePoint pi_prime(const NumClass& v, const CY3Context& ctx);

struct Normalized {
  Rational t;
  NumClass v;
};
Normalized normalize_tH(const NumClass& v, const CY3Context& ctx);

// Positive proportionality of (C0, C1, C2).
bool ch_H_proportional(const NumClass& a, const NumClass& b, const CY3Context& ctx);

}  // namespace wallcross
