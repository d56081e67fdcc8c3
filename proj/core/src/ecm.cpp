// Lenstra's elliptic-curve method on Montgomery curves in (X:Z) coordinates,
// Suyama parametrization with sigma = 6, 7, ...; stage 2 pairs giant steps of
// D = 210 with the residues coprime to D below D/2. Field arithmetic is
// Montgomery multiplication on raw limbs; gcds with n are unaffected by the
// Montgomery scaling since n is odd.

#include <algorithm>
#include <array>
#include <vector>

#include "reppow/factor.hpp"

namespace reppow::detail {

namespace {

using Limbs = std::vector<mp_limb_t>;

class Field {
 public:
  explicit Field(const mpz_class& n)
      : n_(n), k_(mpz_size(n.get_mpz_t())), mod_(mpz_limbs_read(n.get_mpz_t()), mpz_limbs_read(n.get_mpz_t()) + k_),
        scratch_(2 * k_ + 1) {
    mp_limb_t inv = 1;
    for (int i = 0; i < 7; ++i) inv *= 2 - mod_[0] * inv;
    ninv_ = -inv;
  }

  Limbs zero() const { return Limbs(k_, 0); }

  // x * 2^(64k) mod n
  Limbs from(const mpz_class& x) const {
    mpz_class r = x;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64 * k_);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
    Limbs out(k_, 0);
    std::copy_n(mpz_limbs_read(r.get_mpz_t()), mpz_size(r.get_mpz_t()), out.begin());
    return out;
  }

  mpz_class to_mpz(const Limbs& x) const {
    mpz_class out;
    mpz_import(out.get_mpz_t(), k_, -1, sizeof(mp_limb_t), 0, 0, x.data());
    return out;
  }

  void mul(Limbs& r, const Limbs& a, const Limbs& b) {
    mp_limb_t* t = scratch_.data();
    if (&a == &b) {
      mpn_sqr(t, a.data(), k_);
    } else {
      mpn_mul_n(t, a.data(), b.data(), k_);
    }
    mp_limb_t hi = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      const mp_limb_t c = mpn_addmul_1(t + i, mod_.data(), k_, t[i] * ninv_);
      hi += mpn_add_1(t + i + k_, t + i + k_, k_ - i, c);
    }
    if (hi || mpn_cmp(t + k_, mod_.data(), k_) >= 0) mpn_sub_n(t + k_, t + k_, mod_.data(), k_);
    std::copy_n(t + k_, k_, r.begin());
  }

  void add(Limbs& r, const Limbs& a, const Limbs& b) {
    const mp_limb_t c = mpn_add_n(r.data(), a.data(), b.data(), k_);
    if (c || mpn_cmp(r.data(), mod_.data(), k_) >= 0) mpn_sub_n(r.data(), r.data(), mod_.data(), k_);
  }

  void sub(Limbs& r, const Limbs& a, const Limbs& b) {
    if (mpn_sub_n(r.data(), a.data(), b.data(), k_)) mpn_add_n(r.data(), r.data(), mod_.data(), k_);
  }

  // A proper factor from gcd(x, n), or 0.
  mpz_class proper(const Limbs& x) const {
    mpz_class g;
    const mpz_class v = to_mpz(x);
    mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t());
    return (g > 1 && g < n_) ? g : mpz_class(0);
  }

 private:
  const mpz_class& n_;
  std::size_t k_;
  Limbs mod_;
  Limbs scratch_;
  mp_limb_t ninv_ = 0;
};

struct Point {
  Limbs x, z;
};

class Curve {
 public:
  Curve(Field& f, Limbs a24) : f_(f), a24_(std::move(a24)), t1_(f.zero()), t2_(f.zero()), t3_(f.zero()), t4_(f.zero()) {}

  Point blank() const { return {f_.zero(), f_.zero()}; }

  void dbl(Point& r, const Point& p) {
    f_.add(t1_, p.x, p.z);
    f_.mul(t1_, t1_, t1_);
    f_.sub(t2_, p.x, p.z);
    f_.mul(t2_, t2_, t2_);
    f_.mul(r.x, t1_, t2_);
    f_.sub(t3_, t1_, t2_);
    f_.mul(t4_, a24_, t3_);
    f_.add(t4_, t4_, t2_);
    f_.mul(r.z, t3_, t4_);
  }

  // r = p + q given d = p - q; r may alias any argument
  void add(Point& r, const Point& p, const Point& q, const Point& d) {
    f_.sub(t1_, p.x, p.z);
    f_.add(t2_, q.x, q.z);
    f_.mul(t1_, t1_, t2_);
    f_.add(t2_, p.x, p.z);
    f_.sub(t3_, q.x, q.z);
    f_.mul(t2_, t2_, t3_);
    f_.add(t3_, t1_, t2_);
    f_.mul(t3_, t3_, t3_);
    f_.sub(t4_, t1_, t2_);
    f_.mul(t4_, t4_, t4_);
    f_.mul(t1_, d.z, t3_);
    f_.mul(r.z, d.x, t4_);
    r.x = t1_;
  }

  Point mul(const mpz_class& k, const Point& p) {
    if (k == 1) return p;
    Point r0 = p, r1 = blank();
    dbl(r1, p);
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
      if (mpz_tstbit(k.get_mpz_t(), bit)) {
        add(r0, r1, r0, p);
        dbl(r1, r1);
      } else {
        add(r1, r1, r0, p);
        dbl(r0, r0);
      }
    }
    return r0;
  }

 private:
  Field& f_;
  Limbs a24_;
  Limbs t1_, t2_, t3_, t4_;
};

constexpr unsigned kD = 210;

std::vector<bool> sieve(std::uint64_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

struct Bounds {
  std::uint32_t b1;
  std::uint64_t b2;
  mpz_class stage1;  // product of the prime powers up to b1
  std::vector<bool> is_prime;
};

Bounds make_bounds(std::uint32_t b1) {
  Bounds out{b1, std::uint64_t{b1} * 100, 1, sieve(std::uint64_t{b1} * 100 + kD)};
  for (std::uint32_t q = 2; q <= b1; ++q) {
    if (!out.is_prime[q]) continue;
    std::uint64_t pk = q;
    while (pk * q <= b1) pk *= q;
    out.stage1 *= static_cast<unsigned long>(pk);
  }
  return out;
}

mpz_class one_curve(const mpz_class& n, Field& field, unsigned long sigma, const Bounds& bounds,
                    const Deadline& deadline) {
  const mpz_class s = sigma;
  const mpz_class u = s * s - 5, v = 4 * s;
  mpz_class den = 16 * u * u * u * v, inv;
  mpz_mod(den.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
  if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t())) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    return (g > 1 && g < n) ? g : mpz_class(0);
  }
  const mpz_class vu = v - u;
  mpz_class a24 = vu * vu * vu * (3 * u + v) * inv;
  mpz_mod(a24.get_mpz_t(), a24.get_mpz_t(), n.get_mpz_t());

  Curve curve(field, field.from(a24));
  Point p{field.from(u * u * u), field.from(v * v * v)};

  // stage 1, one ladder over the whole product
  p = curve.mul(bounds.stage1, p);
  deadline.check();
  if (auto g = field.proper(p.z); g != 0) return g;
  if (std::all_of(p.z.begin(), p.z.end(), [](mp_limb_t l) { return l == 0; })) return 0;

  // stage 2: primes q in (b1, b2] written as m*D +- j
  std::array<Point, kD / 2> baby;
  std::vector<unsigned> residues;
  for (auto& pt : baby) pt = curve.blank();
  baby[1] = p;
  Point p2 = curve.blank();
  curve.dbl(p2, p);
  curve.add(baby[3], p2, p, p);
  for (unsigned j = 5; j < kD / 2; j += 2) curve.add(baby[j], baby[j - 2], p2, baby[j - 4]);
  for (unsigned j = 1; j < kD / 2; j += 2) {
    if (j % 3 && j % 5 && j % 7) residues.push_back(j);
  }

  const Point step = curve.mul(mpz_class(kD), p);
  unsigned long m = std::max<unsigned long>(bounds.b1 / kD, 2);
  Point prev = curve.mul(mpz_class(m - 1) * kD, p);
  Point cur = curve.mul(mpz_class(m) * kD, p);
  Limbs acc = field.from(1), t = field.zero(), w = field.zero();
  for (; std::uint64_t{m} * kD <= bounds.b2 + kD; ++m) {
    const std::uint64_t mid = std::uint64_t{m} * kD;
    for (unsigned j : residues) {
      const std::uint64_t lo = mid - j, hi = mid + j;
      const bool hit = (lo > bounds.b1 && lo <= bounds.b2 && bounds.is_prime[lo]) ||
                       (hi > bounds.b1 && hi <= bounds.b2 && bounds.is_prime[hi]);
      if (!hit) continue;
      field.mul(t, cur.x, baby[j].z);
      field.mul(w, baby[j].x, cur.z);
      field.sub(t, t, w);
      field.mul(acc, acc, t);
    }
    if (m % 256 == 0) {
      deadline.check();
      if (auto g = field.proper(acc); g != 0) return g;
    }
    curve.add(prev, cur, step, prev);  // prev becomes (m+1)D
    std::swap(prev, cur);
  }
  return field.proper(acc);
}

}  // namespace

mpz_class ecm_mpz(const mpz_class& n, const Deadline& deadline) {
  struct Level {
    std::uint32_t b1;
    unsigned curves;
  };
  // the usual bounds for 15/20/25/30/35-digit factors
  static constexpr std::array<Level, 5> kLevels{{{2000, 25}, {11000, 90}, {50000, 300}, {250000, 700}, {1000000, 1800}}};
  if (mpz_even_p(n.get_mpz_t())) return 2;

  Field field(n);
  unsigned long sigma = 6;
  for (const auto& level : kLevels) {
    const Bounds bounds = make_bounds(level.b1);
    for (unsigned c = 0; c < level.curves; ++c, ++sigma) {
      deadline.check();
      if (auto g = one_curve(n, field, sigma, bounds, deadline); g != 0) return g;
    }
  }
  return 0;
}

}  // namespace reppow::detail
