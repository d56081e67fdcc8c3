#pragma once

// Factorization of r = (b^(n*l) - 1) / (b^l - 1) through its cyclotomic pieces.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "reppow/factorization.hpp"

namespace reppow {

/// Integer polynomial, constant term first. The zero polynomial has no
/// coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coefficients);

  /// X^m - 1
  static IntPoly x_pow_minus_one(unsigned long m);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  mpz_class evaluate(const mpz_class& x) const;

  IntPoly operator*(const IntPoly& other) const;
  /// Exact division by a monic polynomial; throws if the remainder is nonzero.
  IntPoly divexact(const IntPoly& monic) const;

  std::string str() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// The d-th cyclotomic polynomial (memoized).
IntPoly cyclotomic(unsigned long d);

/// Indices d with d | n*l and d not dividing l, ascending.
std::vector<unsigned long> cyclotomic_indices(unsigned long n, unsigned long l);

/// Irreducible factors Phi_d of (X^(n*l) - 1)/(X^l - 1), in cyclotomic_indices order.
std::vector<IntPoly> cyclotomic_split(unsigned long n, unsigned long l);

struct FactorOptions {
  /// Wall-clock cap per factored number; exceeding it raises Errc::unresolved_base.
  std::optional<std::chrono::milliseconds> budget;
};

bool is_probable_prime(const mpz_class& n);

Factorization factor(const mpz_class& x, const FactorOptions& options = {});

/// Factors Phi_d(b) knowing that every prime factor not dividing d is 1 mod d.
Factorization factor_cyclotomic_value(const mpz_class& value, unsigned long d,
                                      const FactorOptions& options = {});

mpz_class repunit_quotient(const mpz_class& b, unsigned long n, unsigned long l);

Factorization factor_quotient(const mpz_class& b, unsigned long n, unsigned long l,
                              const FactorOptions& options = {});

namespace detail {

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::milliseconds>& budget);
  /// Throws Error{unresolved_base} once the budget is spent.
  void check() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
};

bool is_prime_u64(std::uint64_t n);
/// A nontrivial factor of the odd composite n, or 0 if every seed failed.
std::uint64_t rho_u64(std::uint64_t n, const Deadline& deadline);
/// max_steps > 0 bounds the walk length per seed and gives up with 0.
mpz_class rho_mpz(const mpz_class& n, const Deadline& deadline, unsigned long max_steps = 0);
/// Elliptic-curve splitting of an odd composite; 0 if every curve failed.
mpz_class ecm_mpz(const mpz_class& n, const Deadline& deadline);

}  // namespace detail

}  // namespace reppow
