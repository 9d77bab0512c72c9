#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>

#include "wallcross/numclass.hpp"

namespace wallcross::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  // p/q with |p| <= span*q and q in [1, max_den].
  Rational rational(std::int64_t span, std::int64_t max_den = 12) {
    std::int64_t q = integer(1, max_den);
    return Rational(integer(-span * q, span * q), q);
  }
  NumClass cls(std::int64_t r_lo = -4, std::int64_t r_hi = 4) {
    return NumClass(integer(r_lo, r_hi), rational(8, 6), rational(8, 6), rational(8, 6));
  }
  CY3Context context() {
    CY3Context ctx;
    ctx.h3 = integer(1, 10);
    ctx.c2h = Rational(integer(0, 60));
    return ctx;
  }
  // Point of U with rational coordinates.
  std::pair<Rational, Rational> point_in_U(std::int64_t span = 5) {
    Rational b = rational(span);
    Rational w = b * b / Rational(2) + Rational(integer(1, 400), integer(1, 40));
    return {b, w};
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wallcross::testing
