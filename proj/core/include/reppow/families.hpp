#pragma once

// Constructive generators of infinitely many solutions for every admissible
// triple, plus the bijective and Zeckendorf families. Every generator checks
// its candidates with the full digit-string verifier and drops the ones that
// miss a side inequality, so all output is verified.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "reppow/arith.hpp"
#include "reppow/solution.hpp"

namespace reppow {

/// Residue constraints on the components of a + b sqrt(D); unset means free.
struct Congruence {
  mpz_class modulus;
  std::optional<mpz_class> a_residue;
  std::optional<mpz_class> b_residue;

  bool holds(const QuadInt& x) const;
};

struct NormFamily {
  QuadInt seed;
  QuadInt unit;
  mpz_class target_norm;
  unsigned long step = 1;
  std::optional<Congruence> congruence;

  std::int64_t d() const { return seed.d(); }
};

/// Fundamental units of Z[sqrt(D)] for D in {2, 3, 7}.
QuadInt fundamental_unit(std::int64_t d);

/// Smallest-b element a + b sqrt(D) with a, b > 0, the given norm and the
/// congruence, found by scanning b up to `b_limit`.
QuadInt find_seed(std::int64_t d, const mpz_class& target_norm, const std::optional<Congruence>& congruence,
                  unsigned long b_limit = 1'000'000);

/// Least s >= 1 with N(unit^s) = 1 and unit^s congruent to a rational integer
/// lambda that fixes every constrained residue; capped at `cap` powers.
unsigned long find_congruence_step(const QuadInt& unit, const std::optional<Congruence>& congruence,
                                   unsigned long cap = 10'000);

/// Validates the family invariants (throws Error{bad_family}).
NormFamily make_norm_family(QuadInt seed, QuadInt unit, mpz_class target_norm, unsigned long step,
                            std::optional<Congruence> congruence = std::nullopt);

/// seed, seed*e^step, seed*e^(2 step), ... where e is the unit oriented so
/// that e > 1; components are sign-normalized to be non-negative.
std::vector<QuadInt> norm_family_iter(const NormFamily& f, std::size_t count);

// (q,n) = (2,2) by block length: b^(2^t) = -1 mod p^2 with l = r 2^t.
std::vector<SolutionRecord> gen_22_by_length(unsigned long l, std::size_t count);

struct BaseWitness {
  unsigned long p = 0;
  unsigned long t = 0;
  unsigned long e = 0;  // order of b mod p^2 is 2e
};

/// Prime p >= 5 with b of even order mod p^2 and an integer t in
/// (b^(-1/4) sqrt(p), sqrt(9p/10)); table-driven for b < 16.
BaseWitness base_witness(const mpz_class& b);

// (q,n) = (2,2) for a fixed base: y = (t^2/p)(b^(re)+1), r = 1, 3, 5, ...
std::vector<SolutionRecord> gen_22_by_base(const mpz_class& b, std::size_t count);

std::vector<SolutionRecord> gen_n21(unsigned long q, std::size_t count);
std::vector<SolutionRecord> gen_231(std::size_t count);
std::vector<SolutionRecord> gen_232(std::size_t count);
std::vector<SolutionRecord> gen_322(std::size_t count);
std::vector<SolutionRecord> gen_331(std::size_t count);
std::vector<SolutionRecord> gen_323(std::size_t count);
std::vector<SolutionRecord> gen_241(std::size_t count);
std::vector<SolutionRecord> gen_422(std::size_t count);

/// Dispatches on the triple; `base` selects gen_22_by_base for (2,2,*).
std::vector<SolutionRecord> generate_for_triple(const Triple& t, std::size_t count,
                                                const std::optional<mpz_class>& base = std::nullopt);

/// y = b^l + 1 whose bijective square is w w with w = ((b-1)^(l-2), b, 1).
ReprSolution gen_bijective_square(const mpz_class& b, unsigned long l);

/// One row of the per-base bijective family table. Patterns use `^{an+c}`
/// for repetition, e.g. `((12)^{3n+3})212`.
struct BijectiveFamilyRow {
  unsigned long base = 0;
  std::string y_pattern;
  std::string w_pattern;
};

const std::vector<BijectiveFamilyRow>& bijective_family_table();

/// Expands a repetition pattern at parameter n into digits.
std::vector<mpz_class> expand_pattern(const std::string& pattern, unsigned long n);

/// Instantiates a row at n; throws Error{bad_family} if <y^2>_b != w w.
ReprSolution instantiate_bijective_row(const BijectiveFamilyRow& row, unsigned long n);

/// `row` indexes the table rows for base b (0-based); Error{unknown_family} otherwise.
ReprSolution gen_bijective_table_family(unsigned long b, std::size_t row, unsigned long n);

/// y = F(4n+3) + F(4n+6) + F(8n+8) + F(8n+11).
ReprSolution gen_fibonacci_family(unsigned long n);
/// (y)_F = ((100)^(4n+2), 1,0,1,0,0,0).
ReprSolution gen_fibonacci_family2(unsigned long n);

}  // namespace reppow
