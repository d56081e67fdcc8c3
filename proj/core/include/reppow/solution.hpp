#pragma once

#include <string>

#include <gmpxx.h>

#include "reppow/triples.hpp"
#include "reppow/word.hpp"

namespace reppow {

/// One solution of y^q = c (b^(n l) - 1) / (b^l - 1) with b^(l-1) <= c < b^l;
/// w is the canonical base-b word of c.
struct SolutionRecord {
  Triple triple;
  mpz_class b;
  mpz_class y;
  mpz_class c;
  Word w;

  friend bool operator==(const SolutionRecord& lhs, const SolutionRecord& rhs) {
    return lhs.triple == rhs.triple && lhs.b == rhs.b && lhs.y == rhs.y && lhs.c == rhs.c && lhs.w == rhs.w;
  }
};

/// Orders by base, then y.
bool solution_less(const SolutionRecord& lhs, const SolutionRecord& rhs);

/// Builds the record from (triple, b, y, c) with w = (c)_b; no verification.
SolutionRecord make_record(const Triple& t, const mpz_class& b, const mpz_class& y, const mpz_class& c);

/// y^q written in a non-canonical system (bijective or Zeckendorf) as w repeated n times.
struct ReprSolution {
  NumberSystem system = NumberSystem::zeckendorf;
  mpz_class base = 0;
  unsigned long q = 2;
  unsigned long n = 2;
  mpz_class y;
  Word w;

  friend bool operator==(const ReprSolution& lhs, const ReprSolution& rhs) {
    return lhs.system == rhs.system && lhs.base == rhs.base && lhs.q == rhs.q && lhs.n == rhs.n &&
           lhs.y == rhs.y && lhs.w == rhs.w;
  }
};

}  // namespace reppow
