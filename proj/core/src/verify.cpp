#include "reppow/verify.hpp"

#include "reppow/arith.hpp"
#include "reppow/errors.hpp"
#include "reppow/factor.hpp"

namespace reppow {

bool solution_less(const SolutionRecord& lhs, const SolutionRecord& rhs) {
  if (lhs.triple != rhs.triple) return lhs.triple < rhs.triple;
  if (lhs.b != rhs.b) return lhs.b < rhs.b;
  return lhs.y < rhs.y;
}

SolutionRecord make_record(const Triple& t, const mpz_class& b, const mpz_class& y, const mpz_class& c) {
  return SolutionRecord{t, b, y, c, to_canonical(c, b)};
}

std::optional<std::string> solution_failure(const SolutionRecord& rec) {
  const auto& t = rec.triple;
  if (t.q < 2 || t.n < 2 || t.l < 1) return "triple bounds";
  if (rec.b < 2) return "base >= 2";
  if (rec.y < 2) return "y >= 2";
  if (rec.w.system != NumberSystem::canonical) return "canonical word";
  if (rec.w.base != rec.b) return "word base matches b";
  if (!is_valid_word(rec.w)) return "word digits";
  if (rec.w.size() != t.l) return "|w| = l";
  if (word_value(rec.w) != rec.c) return "[w]_b = c";
  const mpz_class bl = ipow(rec.b, t.l);
  if (rec.c < bl / rec.b || rec.c >= bl) return "b^(l-1) <= c < b^l";
  const mpz_class power = ipow(rec.y, t.q);
  if (power != rec.c * repunit_quotient(rec.b, t.n, t.l)) return "y^q = c (b^(nl)-1)/(b^l-1)";
  if (to_canonical(power, rec.b) != repeat_word(rec.w, t.n)) return "(y^q)_b = w^n";
  return std::nullopt;
}

bool verify_solution(const SolutionRecord& rec) {
  try {
    return !solution_failure(rec).has_value();
  } catch (const Error&) {
    return false;
  }
}

std::optional<std::string> repr_failure(const ReprSolution& rec) {
  if (rec.q < 2 || rec.n < 2) return "q, n >= 2";
  if (rec.y < 1) return "y >= 1";
  if (rec.w.system != rec.system) return "word system";
  if (rec.system == NumberSystem::canonical) return "non-canonical system";
  if (rec.system == NumberSystem::bijective && rec.w.base != rec.base) return "word base matches b";
  if (!is_valid_word(rec.w) || rec.w.empty()) return "word digits";
  const Word expected = to_system(rec.system, ipow(rec.y, rec.q), rec.base);
  if (expected != repeat_word(rec.w, rec.n)) return "<y^q> = w^n";
  return std::nullopt;
}

bool verify_repr_solution(const ReprSolution& rec) {
  try {
    return !repr_failure(rec).has_value();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace reppow
