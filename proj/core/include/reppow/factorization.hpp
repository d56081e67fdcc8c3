#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace reppow {

struct PrimePower {
  mpz_class prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing; `value` is the
/// product of the prime powers (1 for the empty factorization).
struct Factorization {
  std::vector<PrimePower> factors;
  mpz_class value = 1;

  /// Sorts, merges repeated primes and recomputes value.
  static Factorization from_prime_powers(std::vector<PrimePower> powers);

  Factorization& operator*=(const Factorization& other);

  /// `p1^e1 * p2 * ...`, or `1` when empty.
  std::string str() const;

  friend bool operator==(const Factorization& lhs, const Factorization& rhs) {
    return lhs.value == rhs.value && lhs.factors == rhs.factors;
  }
};

}  // namespace reppow
