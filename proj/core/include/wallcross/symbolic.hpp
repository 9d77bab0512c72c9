#pragma once

// Invariants J as formal symbols, expressions over them, and the wall
// relations between them.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wallcross/numclass.hpp"

namespace wallcross {

enum class Label { BW, LargeVolume, Tilt, Gieseker };
std::string_view label_name(Label l);
Label parse_label(std::string_view name);

struct InvariantSymbol {
  Label label = Label::Gieseker;
  // Chamber tag for BW labels, e.g. "+" and "-" on either side of a wall.
  std::string chamber;
  NumClass cls;

  friend bool operator==(const InvariantSymbol& a, const InvariantSymbol& b) {
    return a.label == b.label && a.chamber == b.chamber && a.cls == b.cls;
  }
  friend std::strong_ordering operator<=>(const InvariantSymbol& a, const InvariantSymbol& b);
};

InvariantSymbol J_bw(std::string chamber, const NumClass& c);
InvariantSymbol J_inf(const NumClass& c);
InvariantSymbol J_ti(const NumClass& c);
InvariantSymbol J_gie(const NumClass& c);

// A named unknown coefficient attached to a tuple of classes.
struct OpaqueCoefficient {
  std::string name;
  std::vector<NumClass> classes;

  friend bool operator==(const OpaqueCoefficient&, const OpaqueCoefficient&) = default;
  friend std::strong_ordering operator<=>(const OpaqueCoefficient& a, const OpaqueCoefficient& b);
};

struct Monomial {
  Rational coeff;
  std::vector<InvariantSymbol> symbols;   // sorted multiset
  std::vector<OpaqueCoefficient> opaque;  // sorted multiset
};

// Display names for classes, e.g. {v_n-class -> "v_n"}.
using ClassAliases = std::map<NumClass, std::string>;

class InvariantExpr {
 public:
  InvariantExpr() = default;
  InvariantExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  InvariantExpr(const InvariantSymbol& s);  // NOLINT(google-explicit-constructor)
  static InvariantExpr opaque(const OpaqueCoefficient& c);
  static InvariantExpr from_monomials(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<InvariantSymbol> symbols() const;
  bool has_opaque() const;
  // Coefficient of the degree-one monomial `s` with no opaque factor.
  Rational coefficient_of(const InvariantSymbol& s) const;

  InvariantExpr& operator+=(const InvariantExpr& o);
  InvariantExpr& operator-=(const InvariantExpr& o);
  friend InvariantExpr operator+(InvariantExpr a, const InvariantExpr& b) { return a += b; }
  friend InvariantExpr operator-(InvariantExpr a, const InvariantExpr& b) { return a -= b; }
  friend InvariantExpr operator-(const InvariantExpr& a);
  friend InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b);
  friend bool operator==(const InvariantExpr& a, const InvariantExpr& b);

  // Full evaluation; MissingValue when a symbol or coefficient has no value.
  Rational evaluate(const std::map<InvariantSymbol, Rational>& values,
                    const std::map<OpaqueCoefficient, Rational>& coefficients = {}) const;
  InvariantExpr substitute(const std::map<InvariantSymbol, InvariantExpr>& replacements) const;
  InvariantExpr map_symbols(const std::function<InvariantSymbol(const InvariantSymbol&)>& f) const;

  std::string render(const ClassAliases& aliases = {}) const;

 private:
  void canonicalize();
  std::vector<Monomial> terms_;
};

std::string render_class(const NumClass& c, const ClassAliases& aliases);
std::string render_symbol(const InvariantSymbol& s, const ClassAliases& aliases = {});
std::string render_opaque(const OpaqueCoefficient& c, const ClassAliases& aliases = {});

struct Relation {
  InvariantExpr lhs;
  InvariantExpr rhs;
  std::string render(const ClassAliases& aliases = {}) const;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct ExpansionTerm {
  std::vector<NumClass> tuple;
  Rational coeff;
  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

struct EpsilonExpansion {
  std::vector<ExpansionTerm> terms;
};

EpsilonExpansion epsilon_expansion(const NumClass& alpha, const std::vector<NumClass>& same_slope_classes,
                                   const CY3Context& ctx);

Rational two_term_coeff(const NumClass& a1, const NumClass& a2, const CY3Context& ctx);

struct JsRelation {
  Relation relation;
  Rational chi;
  Rational leading;  // (-1)^(chi-1) * chi * torsion
  bool certified = false;
};

// Relation across the Joyce-Song wall for v_n = make_vn(v, n). `residual`
// lists the other decompositions of v_n along the wall; with `certified`
// (nothing semistable below the wall) the lower chamber term and the
// residual are dropped.
JsRelation js_wall_relation(const NumClass& v, std::int64_t n, const CY3Context& ctx,
                            const std::vector<std::vector<NumClass>>& residual = {}, bool certified = false);

// Hilbert polynomial coefficients (a3, a2, a1, a0) of chi(E(t)).
std::array<Rational, 4> hilbert_coefficients(const NumClass& v, const CY3Context& ctx);
// (a_{d-1}/a_d, ..., a_1/a_d) for the leading degree d.
std::vector<Rational> truncated_reduced_hilbert(const NumClass& v, const CY3Context& ctx);

Relation tilt_gieseker_relation(const NumClass& alpha, const std::vector<std::vector<NumClass>>& decomps,
                                const CY3Context& ctx);

}  // namespace wallcross
