#pragma once

// Lattice enumeration of destabilizing decompositions, wall classification,
// and the bound predicates and certificates used by the reduction driver.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wallcross/bwplane.hpp"

namespace wallcross {

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed rectangle b in [b_lo, b_hi], w in [w_lo, w_hi]; only its part
// inside the open set U matters.
struct Region {
  Rational b_lo, b_hi, w_lo, w_hi;
  void validate() const;
  friend bool operator==(const Region&, const Region&) = default;
};

struct LatticeBox {
  Interval r, c1, c2, c3;
  // Number of lattice points.
  Integer count(const CY3Context& ctx) const;
};

enum class WallType { Type1, Type2a, Type2b, Unclassified };
std::string_view wall_type_name(WallType t);
WallType parse_wall_type(std::string_view name);

struct Decomposition {
  NumClass first;   // lexicographically not larger than `second`
  NumClass second;
  std::set<WallType> types;
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.first == b.first && a.second == b.second && a.types == b.types;
  }
};

struct Wall {
  WallLine line = WallLine::vertical(Rational(0));
  std::vector<Decomposition> decompositions;
  std::set<WallType> classification;
  PlanePoint witness;
  friend bool operator==(const Wall&, const Wall&) = default;
};

struct EngineOptions {
  unsigned threads = 1;
};

// The chord of a line through U together with its part inside the region.
struct WallSegment {
  Surd chord_lo, chord_hi;  // line meets the parabola at these b-values
  Surd seg_lo, seg_hi;      // b-range of the line inside the closed region and closed U
  PlanePoint witness;       // rational point of U on the segment
};

// Geometry shared by the engine and the oracle. nullopt when the line does
// not meet U inside the region.
std::optional<WallSegment> wall_segment(const WallLine& line, const Region& region);

// Full predicate set for one candidate u; returns the wall line and witness
// on success. Used directly by the oracle.
struct AcceptedPart {
  WallLine line;
  PlanePoint witness;
};
std::optional<AcceptedPart> check_decomposition(const NumClass& v, const NumClass& u, const Region& region,
                                                const CY3Context& ctx);

// The box of (r, c1, c2) the engine scans; c3 is derived per candidate. The
// returned c3 interval covers every candidate the engine accepted.
LatticeBox search_box(const NumClass& v, const Region& region, const CY3Context& ctx);

std::vector<Wall> enumerate_walls(const NumClass& v, const Region& region, const CY3Context& ctx,
                                  const EngineOptions& options = {});
std::vector<Wall> brute_force_walls(const NumClass& v, const Region& region, const LatticeBox& box,
                                    const CY3Context& ctx);

struct VnBounds {
  std::int64_t r = 1;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::int64_t q = 0;
  void validate() const;
};

// Bounds read off a normalized class v = (r, 0, -beta, -m).
VnBounds trivial_bounds(const NumClass& v);

struct FactorCheck {
  bool ok = false;
  std::string failed;  // empty when ok
  Rational ch2_lower;
  Rational ch3_upper;
};
FactorCheck is_typevn_factor(const NumClass& u, const VnBounds& vb, const CY3Context& ctx);

// Tags every decomposition of `wall` (a wall for v = make_vn(v0, n)).
std::set<WallType> classify_wall(const NumClass& v, const NumClass& v0, std::int64_t n, Wall& wall,
                                 const CY3Context& ctx, const std::optional<VnBounds>& vb = std::nullopt);

Rational ch3_upper_bound(const NumClass& F, const CY3Context& ctx);
Rational rank_minus1_lower_bound(const Rational& betaH, std::int64_t n, const CY3Context& ctx);

bool suggest_n_conditions(const NumClass& v, const VnBounds& vb, std::int64_t n, const CY3Context& ctx);
std::int64_t suggest_n(const NumClass& v, const VnBounds& vb, const CY3Context& ctx,
                       std::int64_t ceiling = 1000000);

Rational rank2_quartic(const Rational& c, std::int64_t n, const Rational& betaH, const Rational& m,
                       const CY3Context& ctx);

struct CertificatePoint {
  Rational c;
  Rational betaH;
  Rational m;
  Rational value;  // f(c), or a lower bound for f near a critical point
  std::string kind;  // "endpoint", "mesh", "critical"
};

struct QuarticCertificate {
  bool passed = false;
  std::vector<CertificatePoint> points;
  std::optional<CertificatePoint> violation;
};

struct CertificateOptions {
  unsigned mesh = 64;
  // Width of the brackets around roots of f', relative to n.
  unsigned bracket_bits = 40;
};

// Checks f(c) > 0 on [1/h3, n - 1/h3] for every corner of the ranges. The
// minimum of f on the interval sits at an endpoint or a root of f'; the
// roots are bracketed exactly and bounded below with a derivative estimate.
QuarticCertificate rank2_no_wall_certificate(std::int64_t n, const Interval& betaH, const Interval& m,
                                             const CY3Context& ctx, const CertificateOptions& options = {});

Rational rank0_ch3_bound(const NumClass& F, const CY3Context& ctx);

}  // namespace wallcross
