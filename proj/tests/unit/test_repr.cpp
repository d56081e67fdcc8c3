#include <doctest.h>

#include "reppow/errors.hpp"
#include "reppow/word.hpp"

using namespace reppow;

namespace {

std::vector<mpz_class> digits(std::initializer_list<long> ds) {
  std::vector<mpz_class> out;
  for (long d : ds) out.emplace_back(d);
  return out;
}

Word zw(const std::string& bits) { return parse_word(bits, NumberSystem::zeckendorf); }

}  // namespace

TEST_SUITE("repr") {
  TEST_CASE("canonical conversion") {
    CHECK(to_canonical(40034, 15).digits == digits({11, 12, 13, 14}));
    CHECK(to_canonical(0, 7).empty());
    CHECK(to_canonical(343, 18).digits == digits({1, 1, 1}));
    CHECK_THROWS_AS(to_canonical(5, 1), Error);
    try {
      to_canonical(5, 1);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_base);
    }
  }

  TEST_CASE("word values") {
    const mpz_class y("369226867849529411764706");
    const mpz_class x = y * y;
    const Word w = to_canonical(x, 110);
    CHECK(word_value(w) == x);
    CHECK(w.digits.front() == 1);
    CHECK(w.digits[1] == 57);
    CHECK(word_value(make_word(NumberSystem::bijective, 2, digits({2, 1, 2, 1}))) == 25);
    CHECK(word_value(zw("100")) == 3);
    CHECK_THROWS_AS(word_value(Word{NumberSystem::canonical, 10, digits({1, 10})}), Error);
    CHECK_THROWS_AS(validate_word(Word{NumberSystem::canonical, 10, digits({1, 10})}), Error);
    CHECK_THROWS_AS(validate_word(Word{NumberSystem::canonical, 10, digits({0, 1})}), Error);
    CHECK_THROWS_AS(validate_word(Word{NumberSystem::bijective, 3, digits({0, 1})}), Error);
    CHECK_THROWS_AS(validate_word(Word{NumberSystem::zeckendorf, 0, digits({1, 1, 0})}), Error);
  }

  TEST_CASE("repeat and split") {
    const Word seven = make_word(NumberSystem::canonical, 18, digits({7}));
    CHECK(repeat_word(seven, 3).digits == digits({7, 7, 7}));
    CHECK(repeat_word(seven, 1) == seven);
    const Word w = make_word(NumberSystem::canonical, 239, digits({2, 170}));
    CHECK(repeat_word(w, 2).digits == digits({2, 170, 2, 170}));
    CHECK_THROWS_AS(repeat_word(Word{NumberSystem::canonical, 10, {}}, 2), Error);

    CHECK(split_repetition(make_word(NumberSystem::canonical, 18, digits({7, 7, 7})), 3) == seven);
    CHECK_FALSE(split_repetition(make_word(NumberSystem::canonical, 10, digits({1, 2, 1})), 2).has_value());
    CHECK_FALSE(split_repetition(make_word(NumberSystem::canonical, 10, digits({1, 2, 1, 3})), 2).has_value());
  }

  TEST_CASE("bijective conversion") {
    CHECK(to_bijective(25, 2).digits == digits({2, 1, 2, 1}));
    CHECK(to_bijective(172, 7).digits == digits({3, 3, 4}));
    CHECK(to_bijective(9, 9).digits == digits({9}));
    CHECK(to_bijective(10, 10).digits == digits({10}));
    try {
      to_bijective(0, 3);
      FAIL("expected out-of-domain");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::out_of_domain);
    }
  }

  TEST_CASE("Zeckendorf conversion") {
    CHECK(format_digits(to_zeckendorf(16)) == "100100");
    CHECK(to_zeckendorf(0).empty());
    const Word sq = to_zeckendorf(mpz_class(5236) * 5236);
    const auto half = split_repetition(sq, 2);
    REQUIRE(half.has_value());
    CHECK(format_digits(*half) == "100001010010010000");
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(3) == 2);
  }

  TEST_CASE("round trips over sampled ranges") {
    for (long b = 2; b <= 64; ++b) {
      for (long x = 0; x < 3000; x += 7) {
        CHECK(word_value(to_canonical(x, b)) == x);
        if (x > 0) CHECK(word_value(to_bijective(x, b)) == x);
      }
    }
    for (long x = 0; x < 5000; ++x) CHECK(word_value(to_zeckendorf(x)) == x);
    const mpz_class big("123456789012345678901234567890123456789");
    CHECK(word_value(to_canonical(big, 97)) == big);
    CHECK(word_value(to_bijective(big, 10)) == big);
    CHECK(word_value(to_zeckendorf(big)) == big);
  }

  TEST_CASE("Zeckendorf words never hold adjacent ones") {
    bool ok = true;
    for (long x = 0; x < 1'000'000 && ok; ++x) ok = is_valid_word(to_zeckendorf(x));
    CHECK(ok);
  }

  TEST_CASE("split inverts repeat") {
    for (long v = 1; v < 400; v += 3) {
      for (std::size_t n = 2; n <= 5; ++n) {
        const Word u = to_canonical(v, 6);
        CHECK(split_repetition(repeat_word(u, n), n) == u);
      }
    }
  }

  TEST_CASE("bijective representation is injective") {
    // word_value is a left inverse of to_bijective, so equal words would force equal inputs
    for (long b = 2; b <= 10; ++b) {
      bool ok = true;
      for (long x = 1; x <= 1'000'000 && ok; ++x) {
        const Word w = to_bijective(x, b);
        ok = is_valid_word(w) && word_value(w) == x;
      }
      CHECK(ok);
    }
  }

  TEST_CASE("text rendering and parsing") {
    const Word w = make_word(NumberSystem::canonical, 15, digits({11, 12, 13, 14}));
    CHECK(format_word(w) == "(11,12,13,14)@15");
    CHECK(parse_word("(11,12,13,14)@15", NumberSystem::canonical) == w);
    CHECK(parse_word("(11, 12, 13, 14)", NumberSystem::canonical, mpz_class(15)) == w);
    CHECK(parse_word("10100100", NumberSystem::zeckendorf) == zw("10100100"));
    CHECK_THROWS_AS(parse_word("(1,2)", NumberSystem::canonical), Error);
    CHECK_THROWS_AS(parse_word("(1,x)@10", NumberSystem::canonical), Error);
    CHECK_THROWS_AS(parse_word("(1,2)@15", NumberSystem::canonical, mpz_class(16)), Error);
    CHECK_THROWS_AS(parse_word("110", NumberSystem::zeckendorf), Error);
    CHECK(parse_system("fibonacci") == NumberSystem::zeckendorf);
    CHECK(parse_system("bijective") == NumberSystem::bijective);
    CHECK_THROWS_AS(parse_system("roman"), Error);
  }
}
