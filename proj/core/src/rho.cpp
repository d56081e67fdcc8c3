// Pollard-Brent splitting with fixed seeds, plus deterministic Miller-Rabin
// for 64-bit inputs.

#include <numeric>

#include "reppow/errors.hpp"
#include "reppow/factor.hpp"

namespace reppow::detail {

Deadline::Deadline(const std::optional<std::chrono::milliseconds>& budget) {
  if (budget) until_ = std::chrono::steady_clock::now() + *budget;
}

void Deadline::check() const {
  if (until_ && std::chrono::steady_clock::now() > *until_) {
    throw Error(Errc::unresolved_base, "factoring budget exceeded");
  }
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

constexpr unsigned kBatch = 128;

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this base set is deterministic below 2^64
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 rho_u64(u64 n, const Deadline& deadline) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1; c < 64; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    u64 r = 1;
    unsigned long rounds = 0;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u64 lim = std::min<u64>(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += kBatch;
        if (++rounds % 1024 == 0) deadline.check();
      }
      r <<= 1;
    }
    if (g == n) {
      // the batch overshot; walk it one step at a time
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
    deadline.check();
  }
  return 0;
}

mpz_class rho_mpz(const mpz_class& n, const Deadline& deadline, unsigned long max_steps) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class x, y, ys, q, g, diff;
  for (unsigned long c = 1; c < 64; ++c) {
    auto step = [&](mpz_class& v) {
      v *= v;
      v += c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    y = 2;
    x = 2;
    ys = 2;
    q = 1;
    g = 1;
    unsigned long r = 1;
    unsigned long rounds = 0;
    while (g == 1) {
      if (max_steps && r > max_steps) return 0;
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min<unsigned long>(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
        if (++rounds % 64 == 0) deadline.check();
      }
      r <<= 1;
    }
    if (g == n) {
      do {
        step(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    deadline.check();
  }
  return 0;
}

}  // namespace reppow::detail
