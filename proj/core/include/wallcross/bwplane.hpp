#pragma once

// Geometry of U = {w > b^2/2} and the named lines in the (b,w)-plane.

#include <array>
#include <optional>
#include <string>

#include "wallcross/numclass.hpp"

namespace wallcross {

// A*w + B*b + C = 0 with (A, B, C) a primitive integer triple whose first
// nonzero entry is positive.
class WallLine {
 public:
  static WallLine from_coefficients(const Rational& A, const Rational& B, const Rational& C);
  // w = slope*b + intercept.
  static WallLine from_slope(const Rational& slope, const Rational& intercept);
  static WallLine through(const PlanePoint& p, const PlanePoint& q);
  static WallLine vertical(const Rational& b);

  const Rational& A() const { return a_; }
  const Rational& B() const { return b_; }
  const Rational& C() const { return c_; }
  std::array<Integer, 3> triple() const { return {a_.num(), b_.num(), c_.num()}; }

  bool is_vertical() const { return a_.is_zero(); }
  Rational slope() const;      // non-vertical only
  Rational intercept() const;  // non-vertical only
  Rational w_at(const Rational& b) const;
  Rational value(const Rational& b, const Rational& w) const { return a_ * w + b_ * b + c_; }
  Surd value(const Surd& b, const Surd& w) const;
  bool contains(const PlanePoint& p) const { return value(p.b, p.w).is_zero(); }

  // Sign of A*w + B*b + C; positive means above for non-vertical lines.
  int side(const Rational& b, const Rational& w) const { return value(b, w).sign(); }

  // "w = -3/2*b - 1", "w = 1/8", or "b = 2".
  std::string equation() const;

  friend bool operator==(const WallLine&, const WallLine&) = default;

 private:
  WallLine(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  Rational a_, b_, c_;
};

// Ascending slope, vertical lines last, ties broken by the triple.
bool slope_order(const WallLine& x, const WallLine& y);

struct BoundaryIntersection {
  enum class Kind { TwoPoints, Tangent, Empty, Single };
  Kind kind = Kind::Empty;
  Surd a;  // smaller b-value (TwoPoints, Tangent, Single)
  Surd b;  // larger b-value (TwoPoints); equals a otherwise
};

bool in_U(const Rational& b, const Rational& w);

// nullopt when the slopes of u and v never agree on a line: either they agree
// everywhere (proportional ch_H) or nowhere.
std::optional<WallLine> wall_line(const NumClass& u, const NumClass& v, const CY3Context& ctx);

BoundaryIntersection intersect_boundary(const WallLine& l);

WallLine ell_f(const NumClass& v, const CY3Context& ctx);
WallLine ell_js(const NumClass& v, std::int64_t n, const CY3Context& ctx);

// Boundary of the safe area: w = slope*b + intercept, possibly irrational.
struct SafeArea {
  bool degenerate = false;  // Delta_H = 0: U_v = {b < mu_H(v)}
  Surd slope;
  Surd intercept;
  Surd a_v;
  Surd b_v;
  Slope mu;
  std::optional<WallLine> rational_line() const;
  std::string equation() const;
};

SafeArea safe_line(const NumClass& v, const CY3Context& ctx);
bool in_safe_area(const NumClass& v, const Rational& b, const Rational& w, const CY3Context& ctx);
bool in_safe_area(const SafeArea& area, const NumClass& v, const Rational& b, const Rational& w,
                  const CY3Context& ctx);

struct WbgLine {
  WallLine line;
  Rational b1;  // boundary b-values of the line
  Rational b2;
  Rational epsilon;
};

WbgLine ell_wbg(const NumClass& v, std::int64_t n, const CY3Context& ctx);

bool bg_proved_region(const Rational& b, const Rational& w);

}  // namespace wallcross
