#include "wallcross/symbolic.hpp"

#include <algorithm>

namespace wallcross {

namespace {

std::strong_ordering cmp_classes(const std::vector<NumClass>& a, const std::vector<NumClass>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

template <class T>
std::strong_ordering cmp_vec(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

// Pure terms first, then by degree, then lexicographically.
std::strong_ordering cmp_key(const Monomial& a, const Monomial& b) {
  if (auto c = a.opaque.size() <=> b.opaque.size(); c != 0) return c;
  if (auto c = a.symbols.size() <=> b.symbols.size(); c != 0) return c;
  if (auto c = cmp_vec(a.symbols, b.symbols); c != 0) return c;
  return cmp_vec(a.opaque, b.opaque);
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.coeff = a.coeff * b.coeff;
  m.symbols = a.symbols;
  m.symbols.insert(m.symbols.end(), b.symbols.begin(), b.symbols.end());
  std::sort(m.symbols.begin(), m.symbols.end());
  m.opaque = a.opaque;
  m.opaque.insert(m.opaque.end(), b.opaque.begin(), b.opaque.end());
  std::sort(m.opaque.begin(), m.opaque.end());
  return m;
}

Rational integer_chi(const Rational& chi) {
  if (!chi.is_integer()) throw Error(ErrorCode::NonIntegerChi, "chi = " + chi.str() + " is not an integer");
  return chi;
}

// (-1)^(chi-1) * chi
Rational signed_chi(const Rational& chi) {
  Integer k = integer_chi(chi).num();
  bool odd = mpz_odd_p(k.get_mpz_t()) != 0;
  return odd ? chi : -chi;
}

InvariantExpr product_of(const std::vector<InvariantSymbol>& syms) {
  InvariantExpr e(Rational(1));
  for (const auto& s : syms) e = e * InvariantExpr(s);
  return e;
}

}  // namespace

std::string_view label_name(Label l) {
  switch (l) {
    case Label::BW: return "bw";
    case Label::LargeVolume: return "large_volume";
    case Label::Tilt: return "tilt";
    case Label::Gieseker: return "gieseker";
  }
  return "gieseker";
}

Label parse_label(std::string_view name) {
  for (Label l : {Label::BW, Label::LargeVolume, Label::Tilt, Label::Gieseker}) {
    if (label_name(l) == name) return l;
  }
  throw Error(ErrorCode::ParseError, "unknown label '" + std::string(name) + "'");
}

std::strong_ordering operator<=>(const InvariantSymbol& a, const InvariantSymbol& b) {
  if (auto c = static_cast<int>(a.label) <=> static_cast<int>(b.label); c != 0) return c;
  if (auto c = a.chamber.compare(b.chamber) <=> 0; c != 0) return c;
  return a.cls <=> b.cls;
}

std::strong_ordering operator<=>(const OpaqueCoefficient& a, const OpaqueCoefficient& b) {
  if (auto c = a.name.compare(b.name) <=> 0; c != 0) return c;
  return cmp_classes(a.classes, b.classes);
}

InvariantSymbol J_bw(std::string chamber, const NumClass& c) { return {Label::BW, std::move(chamber), c}; }
InvariantSymbol J_inf(const NumClass& c) { return {Label::LargeVolume, "", c}; }
InvariantSymbol J_ti(const NumClass& c) { return {Label::Tilt, "", c}; }
InvariantSymbol J_gie(const NumClass& c) { return {Label::Gieseker, "", c}; }

InvariantExpr::InvariantExpr(const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Monomial{c, {}, {}});
}

InvariantExpr::InvariantExpr(const InvariantSymbol& s) { terms_.push_back(Monomial{Rational(1), {s}, {}}); }

InvariantExpr InvariantExpr::opaque(const OpaqueCoefficient& c) {
  InvariantExpr e;
  e.terms_.push_back(Monomial{Rational(1), {}, {c}});
  return e;
}

InvariantExpr InvariantExpr::from_monomials(std::vector<Monomial> terms) {
  InvariantExpr e;
  for (Monomial& m : terms) {
    std::sort(m.symbols.begin(), m.symbols.end());
    std::sort(m.opaque.begin(), m.opaque.end());
  }
  e.terms_ = std::move(terms);
  e.canonicalize();
  return e;
}

void InvariantExpr::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Monomial& a, const Monomial& b) { return cmp_key(a, b) < 0; });
  std::vector<Monomial> out;
  for (Monomial& m : terms_) {
    if (!out.empty() && cmp_key(out.back(), m) == 0) {
      out.back().coeff += m.coeff;
    } else {
      out.push_back(std::move(m));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Monomial& m) { return m.coeff.is_zero(); }),
            out.end());
  terms_ = std::move(out);
}

std::vector<InvariantSymbol> InvariantExpr::symbols() const {
  std::vector<InvariantSymbol> out;
  for (const Monomial& m : terms_) out.insert(out.end(), m.symbols.begin(), m.symbols.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool InvariantExpr::has_opaque() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Monomial& m) { return !m.opaque.empty(); });
}

Rational InvariantExpr::coefficient_of(const InvariantSymbol& s) const {
  for (const Monomial& m : terms_) {
    if (m.opaque.empty() && m.symbols.size() == 1 && m.symbols[0] == s) return m.coeff;
  }
  return Rational(0);
}

InvariantExpr& InvariantExpr::operator+=(const InvariantExpr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

InvariantExpr& InvariantExpr::operator-=(const InvariantExpr& o) { return *this += -o; }

InvariantExpr operator-(const InvariantExpr& a) {
  InvariantExpr e = a;
  for (Monomial& m : e.terms_) m.coeff = -m.coeff;
  return e;
}

InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b) {
  InvariantExpr e;
  for (const Monomial& x : a.terms_) {
    for (const Monomial& y : b.terms_) e.terms_.push_back(multiply(x, y));
  }
  e.canonicalize();
  return e;
}

bool operator==(const InvariantExpr& a, const InvariantExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (cmp_key(a.terms_[i], b.terms_[i]) != 0 || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Rational InvariantExpr::evaluate(const std::map<InvariantSymbol, Rational>& values,
                                 const std::map<OpaqueCoefficient, Rational>& coefficients) const {
  Rational total(0);
  for (const Monomial& m : terms_) {
    Rational t = m.coeff;
    for (const auto& s : m.symbols) {
      auto it = values.find(s);
      if (it == values.end()) throw Error(ErrorCode::MissingValue, "no value for " + render_symbol(s));
      t *= it->second;
    }
    for (const auto& o : m.opaque) {
      auto it = coefficients.find(o);
      if (it == coefficients.end()) throw Error(ErrorCode::MissingValue, "no value for " + render_opaque(o));
      t *= it->second;
    }
    total += t;
  }
  return total;
}

InvariantExpr InvariantExpr::substitute(const std::map<InvariantSymbol, InvariantExpr>& replacements) const {
  InvariantExpr total;
  for (const Monomial& m : terms_) {
    InvariantExpr t = from_monomials({Monomial{m.coeff, {}, m.opaque}});
    for (const auto& s : m.symbols) {
      auto it = replacements.find(s);
      t = t * (it == replacements.end() ? InvariantExpr(s) : it->second);
    }
    total += t;
  }
  return total;
}

InvariantExpr InvariantExpr::map_symbols(const std::function<InvariantSymbol(const InvariantSymbol&)>& f) const {
  std::vector<Monomial> out = terms_;
  for (Monomial& m : out) {
    for (auto& s : m.symbols) s = f(s);
  }
  return from_monomials(std::move(out));
}

std::string render_class(const NumClass& c, const ClassAliases& aliases) {
  auto it = aliases.find(c);
  return it == aliases.end() ? c.str() : it->second;
}

std::string render_symbol(const InvariantSymbol& s, const ClassAliases& aliases) {
  std::string arg = render_class(s.cls, aliases);
  if (arg.empty() || arg.front() != '(') arg = "(" + arg + ")";
  switch (s.label) {
    case Label::BW: return "J_{bw" + s.chamber + "}" + arg;
    case Label::LargeVolume: return "J_inf" + arg;
    case Label::Tilt: return "J_ti" + arg;
    case Label::Gieseker: return "J" + arg;
  }
  return "J" + arg;
}

std::string render_opaque(const OpaqueCoefficient& c, const ClassAliases& aliases) {
  std::string out = c.name + "[(";
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (i) out += ",";
    out += render_class(c.classes[i], aliases);
  }
  return out + ")]";
}

std::string InvariantExpr::render(const ClassAliases& aliases) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Monomial& m = terms_[i];
    bool negative = m.coeff.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (const auto& o : m.opaque) factors += (factors.empty() ? "" : "*") + render_opaque(o, aliases);
    std::string syms;
    for (const auto& s : m.symbols) syms += (syms.empty() ? "" : "*") + render_symbol(s, aliases);
    if (!factors.empty() && !syms.empty()) factors += " * ";
    factors += syms;
    Rational mag = m.coeff.abs();
    if (factors.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += factors;
    } else {
      out += mag.str() + " * " + factors;
    }
  }
  return out;
}

std::string Relation::render(const ClassAliases& aliases) const {
  return lhs.render(aliases) + " = " + rhs.render(aliases);
}

EpsilonExpansion epsilon_expansion(const NumClass& alpha, const std::vector<NumClass>& same_slope_classes,
                                   const CY3Context& ctx) {
  std::vector<NumClass> set = same_slope_classes;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  EpsilonExpansion out;
  if (set.empty()) return out;
  // a coordinate positive on every summand bounds the tuple length
  using Functional = Rational (*)(const NumClass&, const CY3Context&);
  const Functional functionals[] = {
      [](const NumClass& x, const CY3Context&) { return x.c1; },
      [](const NumClass& x, const CY3Context& c) { return C0(x, c); },
      [](const NumClass& x, const CY3Context&) { return x.c2; },
      [](const NumClass& x, const CY3Context&) { return x.c3; },
  };
  std::optional<Integer> bound;
  for (Functional f : functionals) {
    bool positive = std::all_of(set.begin(), set.end(), [&](const NumClass& x) { return f(x, ctx).sign() > 0; });
    if (!positive) continue;
    Rational least = f(set.front(), ctx);
    for (const NumClass& x : set) least = min(least, f(x, ctx));
    bound = (f(alpha, ctx) / least).floor();
    break;
  }
  if (!bound) {
    throw Error(ErrorCode::InfiniteExpansion, "no coordinate is positive on every summand; tuple length unbounded");
  }
  if (*bound < 1) return out;
  if (*bound > 64) throw Error(ErrorCode::InfiniteExpansion, "tuple length bound " + to_string(*bound) + " too large");
  long max_len = bound->get_si();

  std::vector<NumClass> tuple;
  std::function<void(const NumClass&)> dfs = [&](const NumClass& remaining) {
    for (const NumClass& x : set) {
      tuple.push_back(x);
      NumClass rest = remaining - x;
      if (rest.is_zero()) {
        long m = static_cast<long>(tuple.size());
        Rational coeff = Rational(m % 2 == 0 ? 1 : -1) / Rational(m);
        out.terms.push_back({tuple, coeff});
      } else if (static_cast<long>(tuple.size()) < max_len) {
        dfs(rest);
      }
      tuple.pop_back();
    }
  };
  dfs(alpha);
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) {
    if (a.tuple.size() != b.tuple.size()) return a.tuple.size() < b.tuple.size();
    return cmp_classes(a.tuple, b.tuple) < 0;
  });
  return out;
}

Rational two_term_coeff(const NumClass& a1, const NumClass& a2, const CY3Context& ctx) {
  return signed_chi(euler_pairing(a1, a2, ctx));
}

JsRelation js_wall_relation(const NumClass& v, std::int64_t n, const CY3Context& ctx,
                            const std::vector<std::vector<NumClass>>& residual, bool certified) {
  NumClass vn = make_vn(v, n, ctx);
  JsRelation out;
  out.chi = euler_pairing(structure_sheaf(), twist(v, Rational(-n), ctx), ctx);
  out.leading = signed_chi(out.chi) * Rational(ctx.torsion);
  out.certified = certified;
  out.relation.lhs = InvariantExpr(J_bw("+", vn));
  InvariantExpr rhs = InvariantExpr(out.leading) * InvariantExpr(J_inf(v));
  if (!certified) {
    rhs += InvariantExpr(J_bw("-", vn));
    for (const auto& tuple : residual) {
      InvariantExpr term = InvariantExpr::opaque({"C" + std::to_string(tuple.size()), tuple});
      for (const NumClass& a : tuple) term = term * InvariantExpr(J_bw("-", a));
      rhs += term;
    }
  }
  out.relation.rhs = rhs;
  return out;
}

std::array<Rational, 4> hilbert_coefficients(const NumClass& v, const CY3Context& ctx) {
  Rational r(v.r), h3(ctx.h3);
  return {r * h3 / Rational(6), v.c1 / Rational(2), v.c2 + r * ctx.c2h / Rational(12),
          v.c3 + resolved_c1c2(v, ctx) / Rational(12)};
}

std::vector<Rational> truncated_reduced_hilbert(const NumClass& v, const CY3Context& ctx) {
  auto a = hilbert_coefficients(v, ctx);
  // a[0] is the t^3 coefficient; the constant a[3] is dropped
  for (std::size_t lead = 0; lead < 3; ++lead) {
    if (a[lead].is_zero()) continue;
    std::vector<Rational> out;
    for (std::size_t i = lead + 1; i < 3; ++i) out.push_back(a[i] / a[lead]);
    return out;
  }
  return {};
}

Relation tilt_gieseker_relation(const NumClass& alpha, const std::vector<std::vector<NumClass>>& decomps,
                                const CY3Context& ctx) {
  Relation rel;
  rel.lhs = InvariantExpr(J_ti(alpha));
  InvariantExpr rhs(J_gie(alpha));
  auto target = truncated_reduced_hilbert(alpha, ctx);
  for (const auto& tuple : decomps) {
    if (tuple.size() < 2) throw Error(ErrorCode::Precondition, "a decomposition needs at least two parts");
    NumClass sum;
    std::vector<InvariantSymbol> syms;
    for (const NumClass& a : tuple) {
      sum += a;
      syms.push_back(J_gie(a));
      if (alpha.r > 0 && (a.r < 1 || a.r > alpha.r - 1)) {
        throw Error(ErrorCode::RankConstraintViolated,
                    "part " + a.str() + " has rank outside [1, " + std::to_string(alpha.r - 1) + "]");
      }
      if (truncated_reduced_hilbert(a, ctx) != target) {
        throw Error(ErrorCode::SlopeMismatch, "part " + a.str() + " has a different reduced Hilbert polynomial");
      }
    }
    if (!(sum == alpha)) throw Error(ErrorCode::Precondition, "decomposition does not sum to " + alpha.str());
    InvariantExpr coeff = tuple.size() == 2
                              ? InvariantExpr(two_term_coeff(tuple[0], tuple[1], ctx))
                              : InvariantExpr::opaque({"C" + std::to_string(tuple.size()), tuple});
    rhs += coeff * product_of(syms);
  }
  rel.rhs = rhs;
  return rel;
}

}  // namespace wallcross
