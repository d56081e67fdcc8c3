#pragma once

// Digit words in the three numeration systems: canonical base b, bijective
// base b (digits 1..b) and Zeckendorf (non-adjacent Fibonacci sums).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace reppow {

enum class NumberSystem { canonical, bijective, zeckendorf };

const char* system_name(NumberSystem s) noexcept;
NumberSystem parse_system(std::string_view name);

/// A digit sequence, most significant digit first. `base` is ignored for
/// Zeckendorf words (kept at 0 there).
struct Word {
  NumberSystem system = NumberSystem::canonical;
  mpz_class base = 10;
  std::vector<mpz_class> digits;

  std::size_t size() const noexcept { return digits.size(); }
  bool empty() const noexcept { return digits.empty(); }

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.system == rhs.system && lhs.base == rhs.base && lhs.digits == rhs.digits;
  }
};

Word make_word(NumberSystem system, const mpz_class& base, std::vector<mpz_class> digits);
Word zeckendorf_word(std::vector<mpz_class> digits);

/// Throws Error{malformed_word} if the word breaks its system's digit rules.
void validate_word(const Word& w);
bool is_valid_word(const Word& w) noexcept;

Word to_canonical(const mpz_class& x, const mpz_class& base);
Word to_bijective(const mpz_class& x, const mpz_class& base);
Word to_zeckendorf(const mpz_class& x);
Word to_system(NumberSystem system, const mpz_class& x, const mpz_class& base);

mpz_class word_value(const Word& w);

Word repeat_word(const Word& w, std::size_t n);
std::optional<Word> split_repetition(const Word& w, std::size_t n);

/// Fibonacci numbers with F(0)=0, F(1)=1; Zeckendorf digits use F(2) upward.
mpz_class fibonacci(unsigned long index);

/// `(d1,d2,...,dk)@b` for canonical/bijective, a bit string for Zeckendorf.
std::string format_word(const Word& w);
/// Digits only, without the `@b` suffix: `(d1,...,dk)` or a bit string.
std::string format_digits(const Word& w);
/// Accepts `(d1,...)@b`, or `(d1,...)` when `base` is supplied.
Word parse_word(std::string_view text, NumberSystem system,
                const std::optional<mpz_class>& base = std::nullopt);

}  // namespace reppow
