#pragma once

#include <string>
#include <string_view>

#include "reppow/arith.hpp"

namespace reppow {

/// Exponent q >= 2, repetition count n >= 2, block length l >= 1.
struct Triple {
  unsigned long q = 2;
  unsigned long n = 2;
  unsigned long l = 1;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Throws Error{out_of_domain} when a bound is violated.
Triple make_triple(unsigned long q, unsigned long n, unsigned long l);
/// Parses "q,n,l".
Triple parse_triple(std::string_view text);
std::string format_triple(const Triple& t);

/// (q,n) = (2,2), (n,l) = (2,1), or one of the seven sporadic admissible triples.
bool is_admissible(const Triple& t);

/// F(q,n,l) = (24/25) n l - 1 - n l / q - l, exactly.
Rational F_value(const Triple& t);

}  // namespace reppow
