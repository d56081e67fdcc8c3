#include "reppow/word.hpp"

#include <algorithm>
#include <cctype>

#include "reppow/errors.hpp"

namespace reppow {

const char* system_name(NumberSystem s) noexcept {
  switch (s) {
    case NumberSystem::canonical: return "canonical";
    case NumberSystem::bijective: return "bijective";
    case NumberSystem::zeckendorf: return "fibonacci";
  }
  return "?";
}

NumberSystem parse_system(std::string_view name) {
  if (name == "canonical") return NumberSystem::canonical;
  if (name == "bijective") return NumberSystem::bijective;
  if (name == "fibonacci" || name == "zeckendorf") return NumberSystem::zeckendorf;
  throw Error(Errc::malformed_word, "unknown numeration system '" + std::string(name) + "'");
}

namespace {

void require_base(const mpz_class& base) {
  if (base < 2) throw Error(Errc::invalid_base, "base must be >= 2, got " + base.get_str());
}

std::optional<std::string> word_problem(const Word& w) {
  if (w.system == NumberSystem::zeckendorf) {
    for (std::size_t i = 0; i < w.digits.size(); ++i) {
      const auto& d = w.digits[i];
      if (d != 0 && d != 1) return "Zeckendorf digit outside {0,1}";
      if (d == 1 && i + 1 < w.digits.size() && w.digits[i + 1] == 1) return "adjacent 1s";
    }
    if (!w.digits.empty() && w.digits.front() != 1) return "leading zero";
    return std::nullopt;
  }
  if (w.base < 2) return "base below 2";
  const mpz_class lo = w.system == NumberSystem::bijective ? 1 : 0;
  const mpz_class hi = w.system == NumberSystem::bijective ? w.base : mpz_class(w.base - 1);
  for (const auto& d : w.digits) {
    if (d < lo || d > hi) return "digit " + d.get_str() + " out of range";
  }
  if (w.system == NumberSystem::canonical && !w.digits.empty() && w.digits.front() == 0) {
    return "leading zero";
  }
  return std::nullopt;
}

// Fibonacci table up to the first value exceeding x, indexed from 0.
std::vector<mpz_class> fibs_beyond(const mpz_class& x) {
  std::vector<mpz_class> f{0, 1};
  while (f.back() <= x) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

}  // namespace

Word make_word(NumberSystem system, const mpz_class& base, std::vector<mpz_class> digits) {
  Word w{system, system == NumberSystem::zeckendorf ? mpz_class(0) : base, std::move(digits)};
  validate_word(w);
  return w;
}

Word zeckendorf_word(std::vector<mpz_class> digits) {
  return make_word(NumberSystem::zeckendorf, 0, std::move(digits));
}

void validate_word(const Word& w) {
  if (auto problem = word_problem(w)) throw Error(Errc::malformed_word, *problem);
}

bool is_valid_word(const Word& w) noexcept { return !word_problem(w).has_value(); }

Word to_canonical(const mpz_class& x, const mpz_class& base) {
  require_base(base);
  if (x < 0) throw Error(Errc::out_of_domain, "negative value");
  Word w{NumberSystem::canonical, base, {}};
  mpz_class rest = x, digit;
  while (rest > 0) {
    mpz_tdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    w.digits.push_back(digit);
  }
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

Word to_bijective(const mpz_class& x, const mpz_class& base) {
  require_base(base);
  if (x < 1) throw Error(Errc::out_of_domain, "bijective numeration has no word for " + x.get_str());
  Word w{NumberSystem::bijective, base, {}};
  mpz_class rest = x, digit;
  while (rest > 0) {
    // shifted remainder: a zero remainder becomes the digit b
    mpz_tdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    if (digit == 0) {
      digit = base;
      rest -= 1;
    }
    w.digits.push_back(digit);
  }
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

Word to_zeckendorf(const mpz_class& x) {
  if (x < 0) throw Error(Errc::out_of_domain, "negative value");
  Word w{NumberSystem::zeckendorf, 0, {}};
  if (x == 0) return w;
  const auto f = fibs_beyond(x);
  mpz_class rest = x;
  // f.back() > x, so the leading digit sits at index f.size()-2
  for (std::size_t i = f.size() - 2; i >= 2; --i) {
    if (f[i] <= rest) {
      rest -= f[i];
      w.digits.emplace_back(1);
    } else {
      w.digits.emplace_back(0);
    }
  }
  return w;
}

Word to_system(NumberSystem system, const mpz_class& x, const mpz_class& base) {
  switch (system) {
    case NumberSystem::canonical: return to_canonical(x, base);
    case NumberSystem::bijective: return to_bijective(x, base);
    case NumberSystem::zeckendorf: return to_zeckendorf(x);
  }
  throw Error(Errc::malformed_word, "unknown system");
}

mpz_class word_value(const Word& w) {
  validate_word(w);
  mpz_class value = 0;
  if (w.system == NumberSystem::zeckendorf) {
    // last digit weighs F(2) = 1
    mpz_class lo = 1, hi = 2;
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
      if (*it == 1) value += lo;
      mpz_class next = lo + hi;
      lo = hi;
      hi = next;
    }
    return value;
  }
  for (const auto& d : w.digits) value = value * w.base + d;
  return value;
}

Word repeat_word(const Word& w, std::size_t n) {
  if (w.empty()) throw Error(Errc::empty_word, "cannot repeat the empty word");
  Word out{w.system, w.base, {}};
  out.digits.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.digits.insert(out.digits.end(), w.digits.begin(), w.digits.end());
  }
  return out;
}

std::optional<Word> split_repetition(const Word& w, std::size_t n) {
  if (n == 0 || w.empty() || w.size() % n != 0) return std::nullopt;
  const std::size_t block = w.size() / n;
  for (std::size_t i = block; i < w.size(); ++i) {
    if (w.digits[i] != w.digits[i - block]) return std::nullopt;
  }
  return Word{w.system, w.base, {w.digits.begin(), w.digits.begin() + static_cast<std::ptrdiff_t>(block)}};
}

mpz_class fibonacci(unsigned long index) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), index);
  return f;
}

std::string format_digits(const Word& w) {
  std::string out;
  if (w.system == NumberSystem::zeckendorf) {
    for (const auto& d : w.digits) out.push_back(d == 1 ? '1' : '0');
    return out;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < w.digits.size(); ++i) {
    if (i) out.push_back(',');
    out += w.digits[i].get_str();
  }
  out.push_back(')');
  return out;
}

std::string format_word(const Word& w) {
  if (w.system == NumberSystem::zeckendorf) return format_digits(w);
  return format_digits(w) + "@" + w.base.get_str();
}

Word parse_word(std::string_view text, NumberSystem system, const std::optional<mpz_class>& base) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::malformed_word, why + " in '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }

  if (system == NumberSystem::zeckendorf) {
    std::vector<mpz_class> digits;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw fail("non-binary character");
      digits.emplace_back(ch - '0');
    }
    Word w{system, 0, std::move(digits)};
    if (!is_valid_word(w)) throw fail("invalid Zeckendorf word");
    return w;
  }

  mpz_class b;
  const auto at = s.find('@');
  std::string body = s.substr(0, at);
  if (at != std::string::npos) {
    if (b.set_str(s.substr(at + 1), 10) != 0) throw fail("bad base");
    if (base && *base != b) throw fail("base mismatch");
  } else if (base) {
    b = *base;
  } else {
    throw fail("missing base");
  }
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') throw fail("expected parentheses");
  body = body.substr(1, body.size() - 2);

  std::vector<mpz_class> digits;
  std::size_t pos = 0;
  while (!body.empty() && pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const auto token = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    mpz_class d;
    if (token.empty() || d.set_str(token, 10) != 0) throw fail("bad digit");
    digits.push_back(d);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  Word w{system, b, std::move(digits)};
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  if (auto problem = word_problem(w)) throw fail(*problem);
  return w;
}

}  // namespace reppow
