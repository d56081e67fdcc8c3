#pragma once

// Exact arithmetic helpers: integer roots, rationals, radicals and the real
// quadratic rings Z[sqrt(D)] used by the norm-equation families.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "reppow/factorization.hpp"

namespace reppow {

struct RootResult {
  mpz_class root;
  bool exact = false;
};

/// floor(x^(1/q)) and whether it is exact. q = 0 is an error.
RootResult iroot(const mpz_class& x, unsigned long q);

/// Smallest r with r*r >= x.
mpz_class ceil_sqrt(const mpz_class& x);

/// Numerator/denominator kept reduced with a positive denominator.
using Rational = mpq_class;

Rational make_rational(const mpz_class& num, const mpz_class& den);
std::string format_rational(const Rational& r);

mpz_class radical(const Factorization& f);

mpz_class ipow(const mpz_class& base, unsigned long exponent);

/// a + b*sqrt(D) with D >= 2 not a perfect square.
class QuadInt {
 public:
  QuadInt(mpz_class a, mpz_class b, std::int64_t d);

  static QuadInt one(std::int64_t d) { return QuadInt(1, 0, d); }

  const mpz_class& a() const noexcept { return a_; }
  const mpz_class& b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }

  QuadInt conjugate() const { return QuadInt(a_, -b_, d_); }
  QuadInt operator-() const { return QuadInt(-a_, -b_, d_); }

  std::string str() const;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;

 private:
  mpz_class a_;
  mpz_class b_;
  std::int64_t d_;
};

QuadInt quad_mul(const QuadInt& x, const QuadInt& y);
mpz_class quad_norm(const QuadInt& x);
QuadInt quad_pow(const QuadInt& x, unsigned long k);
/// True iff m divides both component differences.
bool quad_congruent(const QuadInt& x, const QuadInt& y, const mpz_class& m);

inline QuadInt operator*(const QuadInt& x, const QuadInt& y) { return quad_mul(x, y); }

}  // namespace reppow
