#include "reppow/errors.hpp"
#include "reppow/families.hpp"

namespace reppow {

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// The unit with non-negative components; equals +-u or +-u^-1, and is > 1.
QuadInt oriented(const QuadInt& u) { return QuadInt(abs(u.a()), abs(u.b()), u.d()); }

// unit^s reduced mod m is lambda + 0 sqrt(D), and lambda fixes each constrained residue.
bool preserves(const mpz_class& pa, const mpz_class& pb, const Congruence& c) {
  if (mod(pb, c.modulus) != 0) return false;
  for (const auto* r : {&c.a_residue, &c.b_residue}) {
    if (*r && mod(pa * **r - **r, c.modulus) != 0) return false;
  }
  return true;
}

}  // namespace

bool Congruence::holds(const QuadInt& x) const {
  if (a_residue && mod(x.a(), modulus) != mod(*a_residue, modulus)) return false;
  if (b_residue && mod(x.b(), modulus) != mod(*b_residue, modulus)) return false;
  return true;
}

QuadInt fundamental_unit(std::int64_t d) {
  switch (d) {
    case 2: return QuadInt(1, 1, 2);
    case 3: return QuadInt(2, -1, 3);
    case 7: return QuadInt(8, -3, 7);
    default: break;
  }
  throw Error(Errc::bad_family, "no tabulated fundamental unit for D = " + std::to_string(d));
}

QuadInt find_seed(std::int64_t d, const mpz_class& target_norm, const std::optional<Congruence>& congruence,
                  unsigned long b_limit) {
  mpz_class a2;
  for (unsigned long b = 1; b <= b_limit; ++b) {
    a2 = target_norm + mpz_class(d) * b * b;
    if (a2 <= 0) continue;
    auto r = iroot(a2, 2);
    if (!r.exact) continue;
    QuadInt candidate(r.root, b, d);
    if (!congruence || congruence->holds(candidate)) return candidate;
  }
  throw Error(Errc::bad_family, "no seed of norm " + target_norm.get_str() + " with b <= " + std::to_string(b_limit));
}

unsigned long find_congruence_step(const QuadInt& unit, const std::optional<Congruence>& congruence,
                                   unsigned long cap) {
  const QuadInt e = oriented(unit);
  const mpz_class unit_norm = quad_norm(e);
  if (abs(unit_norm) != 1) throw Error(Errc::bad_family, "not a unit: " + unit.str());
  const mpz_class m = congruence ? congruence->modulus : mpz_class(0);
  mpz_class pa = 1, pb = 0, na, nb;
  for (unsigned long s = 1; s <= cap; ++s) {
    na = pa * e.a() + e.d() * pb * e.b();
    nb = pa * e.b() + pb * e.a();
    if (congruence) {
      pa = mod(na, m);
      pb = mod(nb, m);
    } else {
      pa = na;
      pb = nb;
    }
    const bool norm_one = unit_norm == 1 || s % 2 == 0;
    if (!norm_one) continue;
    if (!congruence || preserves(pa, pb, *congruence)) return s;
  }
  throw Error(Errc::bad_family, "no congruence-preserving unit power within cap");
}

NormFamily make_norm_family(QuadInt seed, QuadInt unit, mpz_class target_norm, unsigned long step,
                            std::optional<Congruence> congruence) {
  if (seed.d() != unit.d()) throw Error(Errc::ring_mismatch, "seed and unit live in different rings");
  if (quad_norm(seed) != target_norm) {
    throw Error(Errc::bad_family, "seed " + seed.str() + " has norm " + quad_norm(seed).get_str());
  }
  if (abs(quad_norm(unit)) != 1) throw Error(Errc::bad_family, unit.str() + " is not a unit");
  if (step == 0) throw Error(Errc::bad_family, "step must be >= 1");
  const QuadInt power = quad_pow(oriented(unit), step);
  if (quad_norm(power) != 1) throw Error(Errc::bad_family, "unit power does not preserve the norm");
  if (congruence) {
    if (congruence->modulus < 2) throw Error(Errc::bad_family, "congruence modulus must be >= 2");
    if (!congruence->holds(seed)) throw Error(Errc::bad_family, "seed violates the congruence");
    if (!preserves(mod(power.a(), congruence->modulus), power.b(), *congruence)) {
      throw Error(Errc::bad_family, "unit power does not preserve the congruence");
    }
  }
  return NormFamily{std::move(seed), std::move(unit), std::move(target_norm), step, std::move(congruence)};
}

std::vector<QuadInt> norm_family_iter(const NormFamily& f, std::size_t count) {
  std::vector<QuadInt> out;
  out.reserve(count);
  const QuadInt mult = quad_pow(oriented(f.unit), f.step);
  QuadInt cur = oriented(f.seed);
  for (std::size_t i = 0; i < count; ++i) {
    if (quad_norm(cur) != f.target_norm || (f.congruence && !f.congruence->holds(cur))) {
      throw Error(Errc::bad_family, "family member " + cur.str() + " lost its invariants");
    }
    out.push_back(cur);
    cur = oriented(cur * mult);
  }
  return out;
}

}  // namespace reppow
