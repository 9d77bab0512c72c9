#pragma once

// Exact rationals and elements of real quadratic fields Q(sqrt(m)).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wallcross/error.hpp"

namespace wallcross {

using Integer = mpz_class;

std::string to_string(const Integer& z);
Integer parse_integer(std::string_view text);

// Wraps mpq_class so that every operation yields a concrete canonical value.
// gmpxx expression templates are never exposed to callers.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const Integer& z) : q_(z) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p" or "p/q" with an optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational pow(const Rational& x, unsigned e);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
std::ostream& operator<<(std::ostream& os, const Rational& x);

// Largest integer s with s*s <= n, for n >= 0.
Integer isqrt(const Integer& n);

// Writes n = square * part^2 with `square` square-free; n must be positive.
// Returns the square-free factor and stores the cofactor in `root`.
Integer squarefree_decompose(const Integer& n, Integer& root);

// a + b*sqrt(m), m square-free. Rational values are stored with b = 0, m = 0.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Surd(long long a) : a_(a) {}        // NOLINT(google-explicit-constructor)
  // m may be any non-negative integer; square factors are moved into b.
  Surd(const Rational& a, const Rational& b, const Integer& m);

  // Accepts the rational grammar, or "p/q + r/s*sqrt(m)" / "p/q - r/s*sqrt(m)".
  static Surd parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& m() const { return m_; }
  bool is_rational() const { return b_.is_zero(); }
  Rational as_rational() const;
  int sign() const;
  Surd conjugate() const;
  Integer floor() const;
  Integer ceil() const;
  std::string str() const;
  double to_double() const;

  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x);

 private:
  Rational a_;
  Rational b_;
  Integer m_ = 0;
};

// Radicand shared by x and y (0 if both rational); throws on a mismatch.
Integer common_radicand(const Surd& x, const Surd& y);

std::strong_ordering surd_cmp(const Surd& x, const Surd& y);

inline bool operator==(const Surd& x, const Surd& y) { return surd_cmp(x, y) == 0; }
inline std::strong_ordering operator<=>(const Surd& x, const Surd& y) { return surd_cmp(x, y); }
std::ostream& operator<<(std::ostream& os, const Surd& x);

Surd min(const Surd& x, const Surd& y);
Surd max(const Surd& x, const Surd& y);

struct QuadraticRoots {
  // Ascending. Size 2 for distinct roots, 1 for a double root, 0 otherwise.
  std::vector<Surd> roots;
  bool double_root = false;
  bool empty() const { return roots.empty(); }
};

QuadraticRoots quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

// A rational q with lo < q < hi, chosen deterministically with a power-of-two
// denominator. Requires lo < hi.
Rational rational_between(const Surd& lo, const Surd& hi);

// Rational bounds for a surd to within 2^-bits: lower <= x <= upper.
Rational rational_lower(const Surd& x, unsigned bits);
Rational rational_upper(const Surd& x, unsigned bits);

// floor/ceil of sqrt(x) for rational x >= 0 scaled to 2^-bits resolution.
Rational sqrt_lower(const Rational& x, unsigned bits);
Rational sqrt_upper(const Rational& x, unsigned bits);

}  // namespace wallcross
