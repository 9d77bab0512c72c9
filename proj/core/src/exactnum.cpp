#include "wallcross/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace wallcross {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleRadicands: return "IncompatibleRadicands";
    case ErrorCode::DegenerateQuadratic: return "DegenerateQuadratic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::RankTooLow: return "RankTooLow";
    case ErrorCode::OutsideU: return "OutsideU";
    case ErrorCode::UndefinedDirection: return "UndefinedDirection";
    case ErrorCode::ZeroC1: return "ZeroC1";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::LatticeViolation: return "LatticeViolation";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::UnboundedSearch: return "UnboundedSearch";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::NotAVnClass: return "NotAVnClass";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::NoSuchN: return "NoSuchN";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::InfiniteExpansion: return "InfiniteExpansion";
    case ErrorCode::NonIntegerChi: return "NonIntegerChi";
    case ErrorCode::RankConstraintViolated: return "RankConstraintViolated";
    case ErrorCode::SlopeMismatch: return "SlopeMismatch";
    case ErrorCode::CannotIsolate: return "CannotIsolate";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::EmptyViewport: return "EmptyViewport";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Precondition: return "Precondition";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string_view t = trim(text);
  if (!is_integer_literal(t)) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  if (t.front() == '+') t.remove_prefix(1);
  return Integer(std::string(t), 10);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t));
  std::string_view n = trim(t.substr(0, slash));
  std::string_view d = trim(t.substr(slash + 1));
  if (!is_integer_literal(n) || !is_integer_literal(d) || d.front() == '-' || d.front() == '+') {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(d);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(n), den);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(den(), num());
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.q_ = -a.q_;
  return r;
}

Rational pow(const Rational& x, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

// --------------------------------------------------- integer factorization

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % 1000 + 2, c = seed % 97 + 1, m = 128, g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Integer& v) {
    Integer t = v * v + c;
    Integer out;
    mpz_mod(out.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return out;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer d = x - y;
        mpz_abs(d.get_mpz_t(), d.get_mpz_t());
        q = q * d;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = x - ys;
      mpz_abs(d.get_mpz_t(), d.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer s = isqrt(n);
    std::map<Integer, unsigned> sub;
    factor_into(s, sub);
    for (auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  for (unsigned long seed = 1;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(Integer(n / d), out);
      return;
    }
  }
}

}  // namespace

Integer squarefree_decompose(const Integer& n, Integer& root) {
  if (n <= 0) throw Error(ErrorCode::ParseError, "square-free part of a non-positive integer");
  Integer rest = n;
  Integer part = 1;
  root = 1;
  for (unsigned long p = 2; p < 1000; ++p) {
    if (rest == 1) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) part *= p;
  }
  if (rest > 1) {
    std::map<Integer, unsigned> f;
    factor_into(rest, f);
    for (auto& [p, e] : f) {
      for (unsigned i = 0; i < e / 2; ++i) root *= p;
      if (e % 2 == 1) part *= p;
    }
  }
  return part;
}

// -------------------------------------------------------------------- Surd

Surd::Surd(const Rational& a, const Rational& b, const Integer& m) : a_(a) {
  if (m < 0) throw Error(ErrorCode::ParseError, "negative radicand");
  if (b.is_zero() || m == 0) return;
  Integer root;
  Integer part = squarefree_decompose(m, root);
  Rational bb = b * Rational(root);
  if (part == 1) {
    a_ += bb;
    return;
  }
  b_ = bb;
  m_ = part;
}

Rational Surd::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::IncompatibleRadicands, "surd " + str() + " is irrational");
  return a_;
}

int Surd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 m
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(m_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

Surd Surd::conjugate() const {
  Surd r = *this;
  r.b_ = -b_;
  return r;
}

Integer common_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.m();
  if (y.is_rational()) return x.m();
  if (x.m() != y.m()) {
    throw Error(ErrorCode::IncompatibleRadicands,
                "sqrt(" + x.m().get_str() + ") vs sqrt(" + y.m().get_str() + ")");
  }
  return x.m();
}

Surd operator+(const Surd& x, const Surd& y) {
  Integer m = common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, m);
}

Surd operator-(const Surd& x, const Surd& y) {
  Integer m = common_radicand(x, y);
  return Surd(x.a_ - y.a_, x.b_ - y.b_, m);
}

Surd operator-(const Surd& x) {
  Surd r = x;
  r.a_ = -x.a_;
  r.b_ = -x.b_;
  return r;
}

Surd operator*(const Surd& x, const Surd& y) {
  Integer m = common_radicand(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(m);
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return Surd(a, b, m);
}

Surd operator/(const Surd& x, const Surd& y) {
  if (y.is_rational()) {
    Rational d = y.as_rational();
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "surd division by zero");
    return Surd(x.a_ / d, x.b_ / d, x.m_);
  }
  Integer m = common_radicand(x, y);
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(m);
  Surd num = x * y.conjugate();
  return Surd(num.a_ / norm, num.b_ / norm, num.m_);
}

Integer Surd::floor() const {
  if (is_rational()) return a_.floor();
  Integer s = isqrt(m_);
  Rational lo_b = b_ * Rational(b_.sign() > 0 ? s : s + 1);
  Rational hi_b = b_ * Rational(b_.sign() > 0 ? s + 1 : s);
  Integer lo = (a_ + lo_b).floor();
  Integer hi = (a_ + hi_b).floor() + 1;
  // invariant: lo <= value < hi
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (surd_cmp(Surd(Rational(mid)), *this) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Integer Surd::ceil() const { return -((-*this).floor()); }

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  std::string out = a_.str();
  out += b_.sign() < 0 ? " - " : " + ";
  Rational mag = b_.abs();
  out += mag.str() + "*sqrt(" + m_.get_str() + ")";
  return out;
}

double Surd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(m_.get_d());
}

Surd Surd::parse(std::string_view text) {
  std::string_view t = trim(text);
  auto star = t.find("*sqrt(");
  if (star == std::string_view::npos) return Surd(Rational::parse(t));
  if (t.back() != ')') throw Error(ErrorCode::ParseError, "bad surd: '" + std::string(text) + "'");
  Integer m = parse_integer(t.substr(star + 6, t.size() - star - 7));
  std::string_view head = trim(t.substr(0, star));
  // head is "A + B", "A - B" or "B"
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && std::isspace(static_cast<unsigned char>(head[i - 1]))) {
      split = i;
      break;
    }
  }
  Rational a;
  Rational b;
  if (split == std::string_view::npos) {
    b = Rational::parse(head);
  } else {
    a = Rational::parse(head.substr(0, split));
    b = Rational::parse(head.substr(split + 1));
    if (head[split] == '-') b = -b;
  }
  return Surd(a, b, m);
}

std::strong_ordering surd_cmp(const Surd& x, const Surd& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.str(); }

Surd min(const Surd& x, const Surd& y) { return y < x ? y : x; }
Surd max(const Surd& x, const Surd& y) { return x < y ? y : x; }

QuadraticRoots quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw Error(ErrorCode::DegenerateQuadratic, "leading coefficient is zero");
  QuadraticRoots out;
  Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return out;
  Rational two_a = Rational(2) * a;
  if (disc.is_zero()) {
    out.roots.push_back(Surd(-b / two_a));
    out.double_root = true;
    return out;
  }
  // sqrt(p/q) = sqrt(p*q)/q
  Surd root(Rational(0), Rational(1) / Rational(disc.den()), disc.num() * disc.den());
  Surd r1 = (Surd(-b) - root) / Surd(two_a);
  Surd r2 = (Surd(-b) + root) / Surd(two_a);
  if (r2 < r1) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

Rational rational_between(const Surd& lo, const Surd& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::Precondition, "rational_between needs lo < hi");
  Integer scale = 1;
  for (;;) {
    Rational s(scale);
    Rational q = Rational((lo * Surd(s)).floor() + 1, scale);
    if (Surd(q) < hi) return q;
    scale *= 2;
  }
}

Rational rational_lower(const Surd& x, unsigned bits) {
  if (x.is_rational()) return x.as_rational();
  Integer scale = 1;
  scale <<= bits;
  return Rational((x * Surd(Rational(scale))).floor(), scale);
}

Rational rational_upper(const Surd& x, unsigned bits) {
  if (x.is_rational()) return x.as_rational();
  Integer scale = 1;
  scale <<= bits;
  return Rational((x * Surd(Rational(scale))).ceil(), scale);
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
  if (x.sign() < 0) throw Error(ErrorCode::Precondition, "sqrt of a negative rational");
  Integer scale = Integer(1) << bits;
  return Rational(isqrt((x * Rational(Integer(scale * scale))).floor()), scale);
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (x.sign() < 0) throw Error(ErrorCode::Precondition, "sqrt of a negative rational");
  Integer scale = Integer(1) << bits;
  Integer target = (x * Rational(Integer(scale * scale))).ceil();
  Integer s = isqrt(target);
  if (s * s < target) s += 1;
  return Rational(s, scale);
}

}  // namespace wallcross
