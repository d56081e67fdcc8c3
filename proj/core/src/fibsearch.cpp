#include <array>
#include <cstdint>

#include "reppow/arith.hpp"
#include "reppow/errors.hpp"
#include "reppow/search.hpp"

namespace reppow {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// F(0..93); F(93) is the largest Fibonacci number below 2^64.
constexpr std::array<u64, 94> kFib = [] {
  std::array<u64, 94> f{};
  f[1] = 1;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}();

// Zeckendorf bits of v (bit 0 = weight F(2)) when the word is an n-fold
// repetition; `len` receives the word length.
bool zeckendorf_repeats(u64 v, unsigned long n, std::size_t& top, u128& bits, std::size_t& len) {
  while (top + 1 < kFib.size() && kFib[top + 1] <= v) ++top;
  len = top - 1;
  if (len % n != 0) return false;
  bits = 0;
  for (std::size_t k = top; k >= 2; --k) {
    bits <<= 1;
    if (kFib[k] <= v) {
      v -= kFib[k];
      bits |= 1;
      if (k == 2) break;
      bits <<= 1;
      --k;
    }
  }
  const std::size_t block = len / n;
  const u128 mask = block >= 128 ? ~u128{0} : ((u128{1} << block) - 1);
  const u128 first = bits & mask;
  for (unsigned long j = 1; j < n; ++j) {
    if (((bits >> (block * j)) & mask) != first) return false;
  }
  return true;
}

Word bits_to_word(u128 bits, std::size_t len, std::size_t count) {
  std::vector<mpz_class> digits;
  digits.reserve(count);
  for (std::size_t i = 0; i < count; ++i) digits.emplace_back(static_cast<unsigned>((bits >> (len - 1 - i)) & 1));
  return zeckendorf_word(std::move(digits));
}

}  // namespace

std::vector<ReprSolution> search_fib_powers(unsigned long q, unsigned long n, const mpz_class& y_max) {
  if (q < 2 || n < 2) throw Error(Errc::out_of_domain, "need q >= 2 and n >= 2");
  std::vector<ReprSolution> out;
  if (y_max <= 1) return out;

  // y^q stays below 2^64 for y < fast_end
  mpz_class fast_end = iroot(mpz_class(1) << 64 /*2^64*/, q).root;
  if (ipow(fast_end, q) >= (mpz_class(1) << 64)) fast_end -= 1;
  fast_end += 1;
  if (fast_end > y_max) fast_end = y_max;

  const u64 fast_stop = fast_end.get_ui();
  std::size_t top = 2;
  for (u64 y = 1; y < fast_stop; ++y) {
    u64 v = 1;
    for (unsigned long i = 0; i < q; ++i) v *= y;
    u128 bits = 0;
    std::size_t len = 0;
    if (zeckendorf_repeats(v, n, top, bits, len)) {
      out.push_back({NumberSystem::zeckendorf, 0, q, n, mpz_class(static_cast<unsigned long>(y)),
                     bits_to_word(bits, len, len / n)});
    }
  }

  for (mpz_class y = fast_end; y < y_max; ++y) {
    const Word full = to_zeckendorf(ipow(y, q));
    if (auto w = split_repetition(full, n)) out.push_back({NumberSystem::zeckendorf, 0, q, n, y, *w});
  }
  return out;
}

std::vector<ReprSolution> search_fib_squares(const mpz_class& y_max) { return search_fib_powers(2, 2, y_max); }

}  // namespace reppow
