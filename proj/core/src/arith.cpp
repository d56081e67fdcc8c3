#include "reppow/arith.hpp"

#include <algorithm>
#include <map>

#include "reppow/errors.hpp"

namespace reppow {

RootResult iroot(const mpz_class& x, unsigned long q) {
  if (q == 0) throw Error(Errc::invalid_exponent, "root index must be >= 1");
  if (x < 0) throw Error(Errc::out_of_domain, "iroot of a negative number");
  RootResult out;
  mpz_class rem;
  mpz_rootrem(out.root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), q);
  out.exact = rem == 0;
  return out;
}

mpz_class ceil_sqrt(const mpz_class& x) {
  if (x <= 0) return 0;
  auto r = iroot(x, 2);
  return r.exact ? r.root : mpz_class(r.root + 1);
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::out_of_domain, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpz_class radical(const Factorization& f) {
  mpz_class r = 1;
  for (const auto& pp : f.factors) r *= pp.prime;
  return r;
}

mpz_class ipow(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Factorization Factorization::from_prime_powers(std::vector<PrimePower> powers) {
  std::map<mpz_class, unsigned long> merged;
  for (auto& pp : powers) {
    if (pp.exponent) merged[pp.prime] += pp.exponent;
  }
  Factorization f;
  for (auto& [p, e] : merged) {
    f.factors.push_back({p, e});
    f.value *= ipow(p, e);
  }
  return f;
}

Factorization& Factorization::operator*=(const Factorization& other) {
  auto all = factors;
  all.insert(all.end(), other.factors.begin(), other.factors.end());
  *this = from_prime_powers(std::move(all));
  return *this;
}

std::string Factorization::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& pp : factors) {
    if (!out.empty()) out += " * ";
    out += pp.prime.get_str();
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

QuadInt::QuadInt(mpz_class a, mpz_class b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 2 || mpz_perfect_square_p(mpz_class(d).get_mpz_t())) {
    throw Error(Errc::out_of_domain, "D must be >= 2 and not a square, got " + std::to_string(d));
  }
}

std::string QuadInt::str() const {
  std::string out = a_.get_str();
  out += b_ < 0 ? "-" : "+";
  out += mpz_class(abs(b_)).get_str() + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
  if (x.d() != y.d()) throw Error(Errc::ring_mismatch, "multiplying elements of different rings");
  const mpz_class d = x.d();
  return QuadInt(x.a() * y.a() + d * x.b() * y.b(), x.a() * y.b() + x.b() * y.a(), x.d());
}

mpz_class quad_norm(const QuadInt& x) { return x.a() * x.a() - x.d() * (x.b() * x.b()); }

QuadInt quad_pow(const QuadInt& x, unsigned long k) {
  QuadInt result = QuadInt::one(x.d());
  QuadInt square = x;
  while (k) {
    if (k & 1) result = result * square;
    k >>= 1;
    if (k) square = square * square;
  }
  return result;
}

bool quad_congruent(const QuadInt& x, const QuadInt& y, const mpz_class& m) {
  if (x.d() != y.d()) throw Error(Errc::ring_mismatch, "comparing elements of different rings");
  const mpz_class da = x.a() - y.a();
  const mpz_class db = x.b() - y.b();
  return mpz_divisible_p(da.get_mpz_t(), m.get_mpz_t()) && mpz_divisible_p(db.get_mpz_t(), m.get_mpz_t());
}

}  // namespace reppow
