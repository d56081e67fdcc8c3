#include "reppow/triples.hpp"

#include <array>
#include <charconv>

#include "reppow/errors.hpp"

namespace reppow {

namespace {

constexpr std::array<Triple, 7> kSporadicAdmissible{{
    {2, 3, 1}, {2, 3, 2}, {3, 2, 2}, {3, 2, 3}, {3, 3, 1}, {2, 4, 1}, {4, 2, 2},
}};

}  // namespace

Triple make_triple(unsigned long q, unsigned long n, unsigned long l) {
  if (q < 2 || n < 2 || l < 1) {
    throw Error(Errc::out_of_domain, "triple needs q >= 2, n >= 2, l >= 1");
  }
  return Triple{q, n, l};
}

Triple parse_triple(std::string_view text) {
  std::array<unsigned long, 3> v{};
  std::size_t field = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (field < 3) {
    auto [next, ec] = std::from_chars(p, end, v[field]);
    if (ec != std::errc()) break;
    ++field;
    p = next;
    if (p == end) break;
    if (*p != ',') break;
    ++p;
  }
  if (field != 3 || p != end) {
    throw Error(Errc::out_of_domain, "expected 'q,n,l', got '" + std::string(text) + "'");
  }
  return make_triple(v[0], v[1], v[2]);
}

std::string format_triple(const Triple& t) {
  return std::to_string(t.q) + "," + std::to_string(t.n) + "," + std::to_string(t.l);
}

bool is_admissible(const Triple& t) {
  if (t.q == 2 && t.n == 2) return true;
  if (t.n == 2 && t.l == 1) return true;
  for (const auto& s : kSporadicAdmissible) {
    if (s == t) return true;
  }
  return false;
}

Rational F_value(const Triple& t) {
  const mpz_class nl = mpz_class(t.n) * t.l;
  Rational f = make_rational(24 * nl, 25) - 1 - make_rational(nl, t.q) - Rational(mpz_class(t.l));
  f.canonicalize();
  return f;
}

}  // namespace reppow
