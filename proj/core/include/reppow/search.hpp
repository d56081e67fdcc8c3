#pragma once

// Exhaustive per-base search for y^q = c (b^(n l) - 1)/(b^l - 1), its
// brute-force oracle, and the resumable multi-worker range driver.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "reppow/factor.hpp"
#include "reppow/solution.hpp"
#include "reppow/triples.hpp"

namespace reppow {

/// Least d > 0 with d * f.value a perfect q-th power.
mpz_class compute_defect(const Factorization& f, unsigned long q);

/// Every solution at base b, sorted by y. Throws Error{unresolved_base} when
/// the factoring budget runs out.
std::vector<SolutionRecord> solutions_for_base(const Triple& t, const mpz_class& b,
                                               const FactorOptions& options = {});

constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Tries every c in [b^(l-1), b^l); requires b^l <= kBruteForceLimit.
std::vector<SolutionRecord> brute_solutions_for_base(const Triple& t, const mpz_class& b);

/// Inclusive interval of bases.
struct BaseRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const BaseRange&, const BaseRange&) = default;
};

struct Checkpoint {
  Triple triple;
  std::vector<BaseRange> completed_ranges;
  std::vector<SolutionRecord> solutions;
  std::vector<std::uint64_t> unresolved_bases;

  /// Merges overlapping/adjacent ranges and sorts/deduplicates the rest.
  void normalize();
  bool covers(std::uint64_t b) const;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct SearchOptions {
  unsigned workers = 1;
  std::uint64_t chunk_size = 128;
  std::optional<std::filesystem::path> checkpoint_path;
  FactorOptions factor;
};

/// Searches [b_lo, b_hi], skipping bases already covered by the checkpoint
/// file, appending progress to it, and returning the merged checkpoint.
Checkpoint search_range(const Triple& t, std::uint64_t b_lo, std::uint64_t b_hi,
                        const SearchOptions& options = {});

/// All y < y_max whose Zeckendorf word of y^q is an n-fold repetition.
std::vector<ReprSolution> search_fib_powers(unsigned long q, unsigned long n, const mpz_class& y_max);
std::vector<ReprSolution> search_fib_squares(const mpz_class& y_max);

}  // namespace reppow
