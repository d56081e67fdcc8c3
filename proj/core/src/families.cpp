#include <algorithm>
#include <array>
#include <functional>

#include "reppow/errors.hpp"
#include "reppow/factor.hpp"
#include "reppow/families.hpp"
#include "reppow/verify.hpp"

namespace reppow {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

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

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Multiplicative order of a modulo p^2 (gcd(a, p) = 1).
u64 order_mod_p2(u64 a, u64 p) {
  const u64 m = p * p;
  u64 ord = p * (p - 1);
  auto qs = prime_divisors(p - 1);
  qs.push_back(p);
  for (u64 q : qs) {
    while (ord % q == 0 && powmod(a, ord / q, m) == 1) ord /= q;
  }
  return ord;
}

u64 primitive_root_mod_p2(u64 p) {
  const auto qs = prime_divisors(p - 1);
  for (u64 g = 2;; ++g) {
    bool primitive = std::all_of(qs.begin(), qs.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (!primitive) continue;
    return powmod(g, p - 1, p * p) == 1 ? g + p : g;
  }
}

u64 next_prime(u64 p) {
  do ++p;
  while (!detail::is_prime_u64(p));
  return p;
}

// Keeps emitted records that verify; stops after `count` or `max_candidates`.
class Collector {
 public:
  explicit Collector(std::size_t count) : count_(count) {}

  bool done() const { return out_.size() >= count_; }
  void offer(const SolutionRecord& rec) {
    if (!done() && verify_solution(rec)) out_.push_back(rec);
  }
  std::vector<SolutionRecord> take() { return std::move(out_); }

 private:
  std::size_t count_;
  std::vector<SolutionRecord> out_;
};

NormFamily congruence_family(std::int64_t d, const mpz_class& norm, std::optional<Congruence> cong,
                             unsigned long expected_step) {
  const QuadInt unit = fundamental_unit(d);
  const QuadInt seed = find_seed(d, norm, cong);
  const unsigned long step = find_congruence_step(unit, cong);
  if (step != expected_step) {
    throw Error(Errc::bad_family, "unit step " + std::to_string(step) + " differs from the expected " +
                                      std::to_string(expected_step));
  }
  return make_norm_family(seed, unit, norm, step, std::move(cong));
}

// Walks family members until `count` verified records come out.
std::vector<SolutionRecord> from_family(const NormFamily& fam, std::size_t count,
                                        const std::function<std::optional<SolutionRecord>(const QuadInt&)>& build) {
  Collector col(count);
  std::size_t batch = count + 4;
  std::size_t seen = 0;
  while (!col.done()) {
    const auto members = norm_family_iter(fam, seen + batch);
    for (std::size_t i = seen; i < members.size() && !col.done(); ++i) {
      if (auto rec = build(members[i])) col.offer(*rec);
    }
    seen = members.size();
    if (seen > 4 * count + 64) break;
    batch *= 2;
  }
  return col.take();
}

NormFamily pell_minus_one_family() { return congruence_family(2, -1, std::nullopt, 2); }

}  // namespace

std::vector<SolutionRecord> gen_22_by_length(unsigned long l, std::size_t count) {
  if (l < 1) throw Error(Errc::out_of_domain, "block length must be >= 1");
  unsigned long t = 0;
  while (((l >> t) & 1) == 0) ++t;
  if (t >= 40) throw Error(Errc::too_large, "2-adic valuation of l too large");
  const u64 modulus = u64{1} << (t + 1);
  const Triple triple{2, 2, l};

  Collector col(count);
  for (u64 p = 5; !col.done() && p < 2'000'000; p = next_prime(p)) {
    if (p % modulus != 1) continue;
    const u64 p2 = p * p;
    // h has order 2^(t+1); the witnesses are its odd powers
    const u64 h = powmod(primitive_root_mod_p2(p), p * (p - 1) / modulus, p2);
    u64 best = p2;
    const u64 h2 = mulmod(h, h, p2);
    u64 cur = h;
    for (u64 j = 1; j < modulus; j += 2) {
      if (cur >= 2) best = std::min(best, cur);
      cur = mulmod(cur, h2, p2);
    }
    if (best >= p2) continue;

    const mpz_class b(static_cast<unsigned long>(best));
    const mpz_class pp(static_cast<unsigned long>(p));
    const mpz_class psq = pp * pp;
    const mpz_class m = (ipow(b, l) + 1) / psq;
    mpz_class ratio;
    mpz_cdiv_q(ratio.get_mpz_t(), psq.get_mpz_t(), b.get_mpz_t());
    const mpz_class v = ceil_sqrt(ratio);
    col.offer(make_record(triple, b, m * v * pp, m * v * v));
  }
  return col.take();
}

BaseWitness base_witness(const mpz_class& b) {
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  struct Row {
    unsigned long p, t;
  };
  static constexpr std::array<Row, 14> kSmallBases{{
      {5, 2}, {5, 2}, {5, 2}, {7, 2}, {7, 2}, {5, 2}, {5, 2},
      {5, 2}, {7, 2}, {13, 3}, {5, 2}, {5, 2}, {5, 2}, {13, 3},
  }};
  if (b < 16) {
    const unsigned long bb = b.get_ui();
    const Row row = kSmallBases[bb - 2];
    const u64 ord = order_mod_p2(bb, row.p);
    if (ord % 2) throw Error(Errc::bad_family, "tabulated prime gives odd order");
    return {row.p, row.t, ord / 2};
  }
  for (u64 p = 5;; p = next_prime(p)) {
    const mpz_class pp(static_cast<unsigned long>(p));
    if (mpz_divisible_p(b.get_mpz_t(), pp.get_mpz_t())) continue;
    mpz_class bm;
    mpz_fdiv_r(bm.get_mpz_t(), b.get_mpz_t(), mpz_class(pp * pp).get_mpz_t());
    const u64 ord = order_mod_p2(bm.get_ui(), p);
    if (ord % 2) continue;
    // integer t with p^2 < b t^4 and 10 t^2 < 9 p
    for (unsigned long t = 1; 10 * t * t < 9 * p; ++t) {
      if (b * ipow(t, 4) > pp * pp) return {static_cast<unsigned long>(p), t, ord / 2};
    }
  }
}

std::vector<SolutionRecord> gen_22_by_base(const mpz_class& b, std::size_t count) {
  const BaseWitness w = base_witness(b);
  const mpz_class p = w.p;
  const mpz_class t = w.t;
  Collector col(count);
  for (unsigned long r = 1; !col.done() && r < 2 * count + 16; r += 2) {
    const unsigned long len = r * w.e;
    const mpz_class big = ipow(b, len) + 1;
    const mpz_class y = t * t * big / p;
    const mpz_class z = ipow(t, 4) * big / (p * p);
    col.offer(make_record(Triple{2, 2, len}, b, y, z));
  }
  return col.take();
}

std::vector<SolutionRecord> gen_n21(unsigned long q, std::size_t count) {
  if (q < 2) throw Error(Errc::out_of_domain, "q must be >= 2");
  Collector col(count);
  for (unsigned long y = 2; !col.done(); ++y) {
    const mpz_class yy = y;
    col.offer(make_record(Triple{q, 2, 1}, ipow(yy, q) - 1, yy, 1));
  }
  return col.take();
}

std::vector<SolutionRecord> gen_231(std::size_t count) {
  // a odd, b even: x = (a-1)/2, y0 = b/2 on 3 y0^2 = x^2 + x + 1
  const auto fam = congruence_family(3, -3, Congruence{2, mpz_class(1), mpz_class(0)}, 2);
  return from_family(fam, count, [](const QuadInt& m) -> std::optional<SolutionRecord> {
    const mpz_class x = (m.a() - 1) / 2;
    if (x < 2) return std::nullopt;
    return make_record(Triple{2, 3, 1}, x, 3 * (m.b() / 2), 3);
  });
}

std::vector<SolutionRecord> gen_232(std::size_t count) {
  // a = 39 mod 98 makes 49 | x^2 - x + 1
  const auto fam = congruence_family(3, -3, Congruence{98, mpz_class(39), std::nullopt}, 56);
  return from_family(fam, count, [](const QuadInt& m) -> std::optional<SolutionRecord> {
    if (mpz_odd_p(m.b().get_mpz_t())) return std::nullopt;
    const mpz_class x = (m.a() - 1) / 2;
    const mpz_class y0 = m.b() / 2;
    const mpz_class g = x * x - x + 1;
    if (!mpz_divisible_ui_p(g.get_mpz_t(), 49)) return std::nullopt;
    const mpz_class c = 3 * g / 49;
    const auto s = iroot(3 * c * g, 2);
    if (!s.exact) return std::nullopt;
    return make_record(Triple{2, 3, 2}, x, s.root * y0, c);
  });
}

std::vector<SolutionRecord> gen_322(std::size_t count) {
  return from_family(pell_minus_one_family(), count, [](const QuadInt& m) -> std::optional<SolutionRecord> {
    if (m.a() < 2) return std::nullopt;
    return make_record(Triple{3, 2, 2}, m.a(), 2 * m.b(), 4 * m.b());
  });
}

std::vector<SolutionRecord> gen_241(std::size_t count) {
  return from_family(pell_minus_one_family(), count, [](const QuadInt& m) -> std::optional<SolutionRecord> {
    if (m.a() < 2) return std::nullopt;
    return make_record(Triple{2, 4, 1}, m.a(), m.b() * (m.a() + 1), (m.a() + 1) / 2);
  });
}

std::vector<SolutionRecord> gen_331(std::size_t count) {
  // 14 | b: x = (a-1)/2, y0 = b/14 on 343 y0^2 = x^2 + x + 1
  const auto fam = congruence_family(7, -3, Congruence{14, std::nullopt, mpz_class(0)}, 14);
  return from_family(fam, count, [](const QuadInt& m) -> std::optional<SolutionRecord> {
    const mpz_class x = (m.a() - 1) / 2;
    const mpz_class y0 = m.b() / 14;
    return make_record(Triple{3, 3, 1}, x, 7 * y0, y0);
  });
}

std::vector<SolutionRecord> gen_323(std::size_t count) {
  Collector col(count);
  for (const auto& rec : gen_331(count)) {
    const mpz_class shift = rec.b + 2;
    col.offer(make_record(Triple{3, 2, 3}, rec.b + 1, rec.y * shift, rec.c * shift * shift));
  }
  return col.take();
}

std::vector<SolutionRecord> gen_422(std::size_t count) {
  // 13 | y0 on 2 y0^2 = x^2 + 1; the family is u^(14k+7)
  const auto fam = congruence_family(2, -1, Congruence{13, std::nullopt, mpz_class(0)}, 14);
  return from_family(fam, count, [](const QuadInt& m) -> std::optional<SolutionRecord> {
    const mpz_class& y0 = m.b();
    const mpz_class num = 648 * y0 * y0;
    const mpz_class den = 28561;  // 13^4
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    return make_record(Triple{4, 2, 2}, m.a(), 6 * y0 / 13, num / den);
  });
}

std::vector<SolutionRecord> generate_for_triple(const Triple& t, std::size_t count,
                                                const std::optional<mpz_class>& base) {
  if (t.q == 2 && t.n == 2) {
    if (base) {
      auto recs = gen_22_by_base(*base, count);
      return recs;
    }
    return gen_22_by_length(t.l, count);
  }
  if (t.n == 2 && t.l == 1) return gen_n21(t.q, count);
  if (t == Triple{2, 3, 1}) return gen_231(count);
  if (t == Triple{2, 3, 2}) return gen_232(count);
  if (t == Triple{3, 2, 2}) return gen_322(count);
  if (t == Triple{3, 2, 3}) return gen_323(count);
  if (t == Triple{3, 3, 1}) return gen_331(count);
  if (t == Triple{2, 4, 1}) return gen_241(count);
  if (t == Triple{4, 2, 2}) return gen_422(count);
  throw Error(Errc::unknown_family, "no constructive family for inadmissible triple " + format_triple(t));
}

ReprSolution gen_bijective_square(const mpz_class& b, unsigned long l) {
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  if (l < 2) throw Error(Errc::out_of_domain, "block length must be >= 2");
  std::vector<mpz_class> digits(l - 2, b - 1);
  digits.push_back(b);
  digits.emplace_back(1);
  ReprSolution rec{NumberSystem::bijective, b, 2, 2, ipow(b, l) + 1, make_word(NumberSystem::bijective, b, digits)};
  if (auto why = repr_failure(rec)) throw Error(Errc::bad_family, "bijective square family: " + *why);
  return rec;
}

ReprSolution gen_fibonacci_family(unsigned long n) {
  if (n < 1) throw Error(Errc::out_of_domain, "n must be >= 1");
  const mpz_class y = fibonacci(4 * n + 3) + fibonacci(4 * n + 6) + fibonacci(8 * n + 8) + fibonacci(8 * n + 11);
  std::vector<mpz_class> d;
  auto put = [&](std::initializer_list<int> bits) {
    for (int bit : bits) d.emplace_back(bit);
  };
  put({1, 0, 0, 0, 0});
  for (unsigned long i = 1; i < n; ++i) put({1, 0, 0, 0});
  put({1, 0, 1, 0, 0, 1, 0, 0, 1});
  d.insert(d.end(), 4 * n, mpz_class(0));
  ReprSolution rec{NumberSystem::zeckendorf, 0, 2, 2, y, zeckendorf_word(std::move(d))};
  if (auto why = repr_failure(rec)) throw Error(Errc::bad_family, "Fibonacci family: " + *why);
  return rec;
}

ReprSolution gen_fibonacci_family2(unsigned long n) {
  if (n < 1) throw Error(Errc::out_of_domain, "n must be >= 1");
  std::vector<mpz_class> yd;
  for (unsigned long i = 0; i < 4 * n + 2; ++i) {
    yd.emplace_back(1);
    yd.emplace_back(0);
    yd.emplace_back(0);
  }
  for (int bit : {1, 0, 1, 0, 0, 0}) yd.emplace_back(bit);
  const mpz_class y = word_value(zeckendorf_word(std::move(yd)));

  std::vector<mpz_class> w;
  for (unsigned long i = 0; i < n; ++i) {
    for (int bit : {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}) w.emplace_back(bit);
  }
  for (int bit : {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0}) w.emplace_back(bit);
  ReprSolution rec{NumberSystem::zeckendorf, 0, 2, 2, y, zeckendorf_word(std::move(w))};
  if (auto why = repr_failure(rec)) throw Error(Errc::bad_family, "second Fibonacci family: " + *why);
  return rec;
}

}  // namespace reppow
