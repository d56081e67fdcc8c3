#include "reppow/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "reppow/arith.hpp"
#include "reppow/errors.hpp"

namespace reppow {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool fits_u64(const mpz_class& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const mpz_class& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

// Splits a cofactor that has no prime factor below the trial bound.
void split_cofactor(const mpz_class& n, const detail::Deadline& deadline, std::vector<PrimePower>& out) {
  std::vector<std::pair<mpz_class, unsigned long>> stack{{n, 1}};
  while (!stack.empty()) {
    auto [m, mult] = std::move(stack.back());
    stack.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      out.push_back({m, mult});
      continue;
    }
    bool was_power = false;
    const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
      auto r = iroot(m, k);
      if (r.root < 2) break;
      if (r.exact) {
        stack.push_back({r.root, mult * k});
        was_power = true;
        break;
      }
    }
    if (was_power) continue;

    mpz_class d;
    if (fits_u64(m)) {
      d = from_u64(detail::rho_u64(to_u64(m), deadline));
    } else {
      // short rho walk for small factors, then curves
      d = detail::rho_mpz(m, deadline, 1UL << 16);
      if (d == 0) d = detail::ecm_mpz(m, deadline);
    }
    if (d <= 1 || d == m) throw Error(Errc::unresolved_base, "could not split " + m.get_str());
    stack.push_back({m / d, mult});
    stack.push_back({d, mult});
  }
}

Factorization factor_impl(const mpz_class& x, unsigned long hint, const FactorOptions& options) {
  if (x < 1) throw Error(Errc::out_of_domain, "factor requires x >= 1, got " + x.get_str());
  const detail::Deadline deadline(options.budget);
  std::vector<PrimePower> found;
  mpz_class n = x;

  bool cofactor_is_prime = false;
  if (fits_u64(n)) {
    std::uint64_t v = to_u64(n);
    for (std::uint32_t p : small_primes()) {
      if (std::uint64_t{p} * p > v) {
        cofactor_is_prime = v > 1;
        break;
      }
      if (hint > 1 && (p - 1) % hint != 0 && hint % p != 0) continue;
      if (v % p == 0) {
        unsigned long e = 0;
        do {
          v /= p;
          ++e;
        } while (v % p == 0);
        found.push_back({p, e});
      }
    }
    n = from_u64(v);
  } else {
    for (std::uint32_t p : small_primes()) {
      if (hint > 1 && (p - 1) % hint != 0 && hint % p != 0) continue;
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        unsigned long e = 0;
        do {
          mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
          ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        found.push_back({p, e});
        if (fits_u64(n)) {
          // finish on the fast path
          auto rest = factor_impl(n, hint, options);
          found.insert(found.end(), rest.factors.begin(), rest.factors.end());
          n = 1;
          break;
        }
      }
    }
  }

  if (n > 1) {
    if (cofactor_is_prime) {
      found.push_back({n, 1});
    } else {
      split_cofactor(n, deadline, found);
    }
  }
  auto f = Factorization::from_prime_powers(std::move(found));
  if (f.value != x) throw Error(Errc::out_of_domain, "internal: factorization does not reproduce input");
  return f;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(unsigned long m) {
  std::vector<mpz_class> c(m + 1, 0);
  c[0] = -1;
  c[m] += 1;
  return IntPoly(std::move(c));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return IntPoly();
  std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divexact(const IntPoly& monic) const {
  if (monic.coeffs_.empty() || monic.coeffs_.back() != 1) {
    throw Error(Errc::out_of_domain, "divisor must be monic");
  }
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dd = monic.coeffs_.size() - 1;
  if (rem.size() <= dd) {
    if (!IntPoly(rem).coeffs_.empty()) throw Error(Errc::out_of_domain, "inexact polynomial division");
    return IntPoly();
  }
  std::vector<mpz_class> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const mpz_class lead = rem[i];
    quot[i - dd] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= lead * monic.coeffs_[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw Error(Errc::out_of_domain, "inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

std::string IntPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly cyclotomic(unsigned long d) {
  static std::map<unsigned long, IntPoly> memo;
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  if (d == 0) throw Error(Errc::out_of_domain, "cyclotomic index must be >= 1");
  IntPoly p = IntPoly::x_pow_minus_one(d);
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e == 0) p = p.divexact(cyclotomic(e));
  }
  std::lock_guard lock(memo_mutex());
  return memo.emplace(d, std::move(p)).first->second;
}

std::vector<unsigned long> cyclotomic_indices(unsigned long n, unsigned long l) {
  std::vector<unsigned long> out;
  const unsigned long m = n * l;
  for (unsigned long d = 1; d <= m; ++d) {
    if (m % d == 0 && l % d != 0) out.push_back(d);
  }
  return out;
}

std::vector<IntPoly> cyclotomic_split(unsigned long n, unsigned long l) {
  static std::map<std::pair<unsigned long, unsigned long>, std::vector<IntPoly>> memo;
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = memo.find({n, l}); it != memo.end()) return it->second;
  }
  std::vector<IntPoly> pieces;
  for (unsigned long d : cyclotomic_indices(n, l)) pieces.push_back(cyclotomic(d));
  std::lock_guard lock(memo_mutex());
  return memo.emplace(std::make_pair(n, l), std::move(pieces)).first->second;
}

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return detail::is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factor(const mpz_class& x, const FactorOptions& options) { return factor_impl(x, 1, options); }

Factorization factor_cyclotomic_value(const mpz_class& value, unsigned long d, const FactorOptions& options) {
  return factor_impl(value, d, options);
}

mpz_class repunit_quotient(const mpz_class& b, unsigned long n, unsigned long l) {
  const mpz_class bl = ipow(b, l);
  return (ipow(bl, n) - 1) / (bl - 1);
}

Factorization factor_quotient(const mpz_class& b, unsigned long n, unsigned long l, const FactorOptions& options) {
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  Factorization out;
  const auto indices = cyclotomic_indices(n, l);
  const auto pieces = cyclotomic_split(n, l);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    out *= factor_cyclotomic_value(pieces[i].evaluate(b), indices[i], options);
  }
  return out;
}

}  // namespace reppow
