#include <cctype>

#include "reppow/errors.hpp"
#include "reppow/families.hpp"
#include "reppow/verify.hpp"

namespace reppow {

const std::vector<BijectiveFamilyRow>& bijective_family_table() {
  static const std::vector<BijectiveFamilyRow> table{
      {2, "((12)^{3n+3})212", "((221112)^{n})221121112"},
      {3, "((1331)^{5n+2})22", "((12132111223231233322)^{n})1213211131"},
      {4, "((21)^{5n+2})3", "((1123421433)^{n})11241"},
      {4, "((24)^{5n+2})4", "((2143311234)^{n})21434"},
      {5, "((31)^{3n+1})4", "((155234)^{n})211"},
      {6, "((41)^{7n+3})5", "((26211162534435)^{n})2621121"},
      {6, "((46)^{7n+3})6", "((42236551331456)^{n})4223656"},
      {7, "(3^{2n+2})4", "((15)^{n+1})2"},
      {8, "((52)^{n+1})6", "((34)^{n+1})4"},
      {9, "((35)^{10n+2})4", "((1385674932)^{2n})13857"},
      {9, "((53)^{10n+2})6", "((3213856749)^{2n})32139"},
      {9, "((71)^{10n+2})8", "((5674932138)^{2n})56751"},
  };
  return table;
}

namespace {

// Recursive-descent reader for digit strings with `(...)` groups and `^{an+c}` repetition.
class PatternReader {
 public:
  PatternReader(const std::string& text, unsigned long n) : s_(text), n_(n) {}

  std::vector<mpz_class> read_all() {
    auto out = read_seq();
    if (pos_ != s_.size()) fail("unexpected ')'");
    return out;
  }

 private:
  std::vector<mpz_class> read_seq() {
    std::vector<mpz_class> out;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      std::vector<mpz_class> item;
      const char ch = s_[pos_];
      if (ch == '(') {
        ++pos_;
        item = read_seq();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("unbalanced '('");
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        item.emplace_back(ch - '0');
        ++pos_;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      unsigned long reps = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') reps = read_exponent();
      for (unsigned long i = 0; i < reps; ++i) out.insert(out.end(), item.begin(), item.end());
    }
    return out;
  }

  // ^{an+c}, ^{an}, ^{n+c}, ^{c}
  unsigned long read_exponent() {
    ++pos_;
    if (pos_ >= s_.size() || s_[pos_] != '{') fail("expected '{' after '^'");
    ++pos_;
    const auto close = s_.find('}', pos_);
    if (close == std::string::npos) fail("unterminated exponent");
    const std::string expr = s_.substr(pos_, close - pos_);
    pos_ = close + 1;

    unsigned long a = 0, c = 0;
    const auto npos = expr.find('n');
    auto number = [&](const std::string& t, unsigned long dflt) {
      if (t.empty()) return dflt;
      for (char ch : t) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad exponent '" + expr + "'");
      }
      return std::stoul(t);
    };
    if (npos == std::string::npos) {
      c = number(expr, 0);
    } else {
      a = number(expr.substr(0, npos), 1);
      std::string rest = expr.substr(npos + 1);
      if (!rest.empty()) {
        if (rest[0] != '+') fail("bad exponent '" + expr + "'");
        c = number(rest.substr(1), 0);
      }
    }
    return a * n_ + c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::malformed_word, "pattern \"" + s_ + "\" at " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  unsigned long n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<mpz_class> expand_pattern(const std::string& pattern, unsigned long n) {
  return PatternReader(pattern, n).read_all();
}

ReprSolution instantiate_bijective_row(const BijectiveFamilyRow& row, unsigned long n) {
  const mpz_class b = row.base;
  const Word yw = make_word(NumberSystem::bijective, b, expand_pattern(row.y_pattern, n));
  const Word w = make_word(NumberSystem::bijective, b, expand_pattern(row.w_pattern, n));
  ReprSolution rec{NumberSystem::bijective, b, 2, 2, word_value(yw), w};
  if (auto why = repr_failure(rec)) {
    throw Error(Errc::bad_family, "bijective row " + row.y_pattern + " at n=" + std::to_string(n) + ": " + *why);
  }
  return rec;
}

ReprSolution gen_bijective_table_family(unsigned long b, std::size_t row, unsigned long n) {
  std::size_t seen = 0;
  for (const auto& r : bijective_family_table()) {
    if (r.base != b) continue;
    if (seen++ == row) return instantiate_bijective_row(r, n);
  }
  throw Error(Errc::unknown_family,
              "no bijective family row " + std::to_string(row) + " for base " + std::to_string(b));
}

}  // namespace reppow
