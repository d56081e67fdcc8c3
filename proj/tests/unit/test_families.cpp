#include <doctest.h>

#include <algorithm>

#include "reppow/errors.hpp"
#include "reppow/families.hpp"
#include "reppow/search.hpp"
#include "reppow/verify.hpp"

using namespace reppow;

namespace {

void check_first(const std::vector<SolutionRecord>& recs, long b, const char* y, const char* w) {
  REQUIRE_FALSE(recs.empty());
  CHECK(recs[0].b == b);
  CHECK(recs[0].y == mpz_class(y));
  CHECK(format_digits(recs[0].w) == w);
}

// Every generated member with b <= b_max must also be found by the search.
void check_inside_search(const Triple& t, const std::vector<SolutionRecord>& recs, std::uint64_t b_max) {
  const auto found = search_range(t, 2, b_max).solutions;
  std::size_t inside = 0;
  for (const auto& r : recs) {
    if (r.b > b_max) continue;
    ++inside;
    CHECK(std::find(found.begin(), found.end(), r) != found.end());
  }
  CHECK(inside > 0);
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("norm family iteration") {
    const auto f = make_norm_family(QuadInt(1, 1, 2), QuadInt(1, 1, 2), -1, 2);
    CHECK(norm_family_iter(f, 3) == std::vector<QuadInt>{QuadInt(1, 1, 2), QuadInt(7, 5, 2), QuadInt(41, 29, 2)});
    CHECK(norm_family_iter(f, 1) == std::vector<QuadInt>{QuadInt(1, 1, 2)});

    const auto g = make_norm_family(QuadInt(3, 2, 3), QuadInt(2, -1, 3), -3, 2);
    const auto members = norm_family_iter(g, 3);
    CHECK(members[1] == QuadInt(45, 26, 3));
    CHECK(members[2] == QuadInt(627, 362, 3));
    for (const auto& m : norm_family_iter(g, 100)) CHECK(quad_norm(m) == -3);

    CHECK_THROWS_AS(make_norm_family(QuadInt(1, 2, 3), QuadInt(2, -1, 3), -3, 2), Error);
    CHECK_THROWS_AS(make_norm_family(QuadInt(3, 2, 3), QuadInt(3, 1, 3), -3, 2), Error);
  }

  TEST_CASE("seeds and unit steps") {
    CHECK(fundamental_unit(2) == QuadInt(1, 1, 2));
    CHECK(fundamental_unit(3) == QuadInt(2, -1, 3));
    CHECK(fundamental_unit(7) == QuadInt(8, -3, 7));
    CHECK_THROWS_AS(fundamental_unit(5), Error);

    const Congruence c231{2, mpz_class(1), mpz_class(0)};
    const Congruence c232{98, mpz_class(39), std::nullopt};
    const Congruence c331{14, std::nullopt, mpz_class(0)};
    const Congruence c422{13, std::nullopt, mpz_class(0)};
    CHECK(find_seed(3, -3, c231) == QuadInt(3, 2, 3));
    CHECK(find_seed(3, -3, c232) == QuadInt(627, 362, 3));
    CHECK(find_seed(7, -3, c331) == QuadInt(37, 14, 7));
    CHECK(find_seed(2, -1, c422) == QuadInt(239, 169, 2));
    CHECK(find_seed(2, -1, std::nullopt) == QuadInt(1, 1, 2));

    CHECK(find_congruence_step(fundamental_unit(3), c231) == 2);
    CHECK(find_congruence_step(fundamental_unit(3), c232) == 56);
    CHECK(find_congruence_step(fundamental_unit(7), c331) == 14);
    CHECK(find_congruence_step(fundamental_unit(2), c422) == 14);
    CHECK(find_congruence_step(fundamental_unit(2), std::nullopt) == 2);
  }

  TEST_CASE("(2,2) by block length") {
    const auto recs = gen_22_by_length(12, 3);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].b == 110);
    CHECK(recs[0].y == mpz_class("369226867849529411764706"));
    CHECK(format_digits(recs[0].w) == "(1,57,52,15,108,52,57,94,1,57,52,16)");
    CHECK(recs[1].b == 776);
    CHECK(recs[2].b == 1032);

    const auto ones = gen_22_by_length(1, 3);
    REQUIRE(ones.size() == 3);
    CHECK(ones[0].b == 24);
    CHECK(ones[0].y == 10);
    CHECK(ones[0].c == 4);
    CHECK(ones[1].b == 48);
    CHECK(ones[2].b == 120);
    for (const auto& r : ones) CHECK(r.w.size() == 1);
  }

  TEST_CASE("(2,2) by base") {
    const auto two = gen_22_by_base(2, 3);
    REQUIRE(two.size() == 3);
    // members of the known sequence 6, 820, 104391567, 119304648, 858993460, ...
    CHECK(two[0].y == 820);
    CHECK(two[1].y == 858993460);
    CHECK(two[0].triple.l == 10);

    const auto seven = gen_22_by_base(7, 1);
    REQUIRE(seven.size() == 1);
    CHECK(seven[0].y == 40);
    CHECK(format_digits(seven[0].w) == "(4,4)");

    CHECK(base_witness(2).e == 10);
    CHECK(base_witness(3).e == 10);
    CHECK(base_witness(4).e == 5);
    CHECK(base_witness(11).p == 13);
    CHECK(base_witness(11).t == 3);
    for (long b = 2; b <= 300; ++b) {
      const auto w = base_witness(b);
      const mpz_class p = w.p, t = w.t;
      CHECK(p * p < b * t * t * t * t);
      CHECK(10 * t * t < 9 * p);
      const auto recs = gen_22_by_base(b, 2);
      REQUIRE(recs.size() == 2);
      for (const auto& r : recs) {
        CHECK(verify_solution(r));
        CHECK(r.w.size() == r.triple.l);
      }
    }
    CHECK(gen_22_by_base(mpz_class("1000000000000000000000"), 1).size() == 1);
  }

  TEST_CASE("(n,l) = (2,1)") {
    const auto sq = gen_n21(2, 2);
    CHECK(sq[0].b == 3);
    CHECK(sq[0].y == 2);
    CHECK(sq[1].b == 8);
    CHECK(sq[1].y == 3);
    const auto cu = gen_n21(3, 1);
    CHECK(cu[0].b == 7);
    CHECK(format_digits(cu[0].w) == "(1)");
  }

  TEST_CASE("first members of the sporadic families") {
    check_first(gen_231(2), 22, "39", "(3)");
    CHECK(gen_231(2)[1].b == 313);
    CHECK(gen_231(2)[1].y == 543);

    const auto r232 = gen_232(2);
    check_first(r232, 313, "7575393", "(19,32)");
    CHECK(r232[1].b == mpz_class("33519770429365238471302383574583401"));

    const auto r322 = gen_322(2);
    check_first(r322, 7, "10", "(2,6)");
    CHECK(r322[0].c == 20);
    CHECK(r322[1].b == 41);
    CHECK(r322[1].y == 58);
    CHECK(format_digits(r322[1].w) == "(2,34)");

    const auto r331 = gen_331(2);
    check_first(r331, 18, "7", "(1)");
    CHECK(r331[1].b == mpz_class("1262403975253755261"));

    const auto r323 = gen_323(2);
    check_first(r323, 19, "140", "(1,2,1)");
    CHECK(r323[0].c == 400);
    CHECK(r323[1].b == mpz_class("1262403975253755262"));

    const auto r241 = gen_241(2);
    check_first(r241, 7, "40", "(4)");
    CHECK(r241[1].b == 41);
    CHECK(r241[1].y == 1218);

    const auto r422 = gen_422(2);
    check_first(r422, 239, "78", "(2,170)");
    CHECK(r422[0].c == 648);
    CHECK(r422[1].b == 54608393);
    CHECK(r422[1].y == 17821830);
    CHECK(format_digits(r422[1].w) == "(619485,15768195)");
  }

  TEST_CASE("25 members of every family verify") {
    const std::vector<Triple> triples{{2, 2, 1}, {2, 2, 6}, {5, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 2},
                                      {3, 3, 1}, {3, 2, 3}, {2, 4, 1}, {4, 2, 2}};
    for (const auto& t : triples) {
      const auto recs = generate_for_triple(t, 25);
      CHECK_MESSAGE(recs.size() == 25, format_triple(t));
      for (const auto& r : recs) {
        CHECK(r.triple == t);
        CHECK(verify_solution(r));
      }
      if (t.n != 2 || t.q != 2) {
        CHECK(std::is_sorted(recs.begin(), recs.end(), [](const auto& x, const auto& y) { return x.b < y.b; }));
      }
    }
    try {
      generate_for_triple({2, 5, 1}, 1);
      FAIL("expected unknown-family");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unknown_family);
    }
  }

  TEST_CASE("congruences hold along the families") {
    for (const auto& r : gen_232(6)) CHECK(mpz_divisible_ui_p(mpz_class(r.b * r.b - r.b + 1).get_mpz_t(), 49));
    const Congruence c232{98, mpz_class(39), std::nullopt};
    const auto fam232 = make_norm_family(QuadInt(627, 362, 3), fundamental_unit(3), -3, 56, c232);
    for (const auto& m : norm_family_iter(fam232, 100)) {
      CHECK(quad_norm(m) == -3);
      CHECK(mpz_class(m.a() % 98) == 39);
    }
    const Congruence c331{14, std::nullopt, mpz_class(0)};
    const auto fam331 = make_norm_family(QuadInt(37, 14, 7), fundamental_unit(7), -3, 14, c331);
    for (const auto& m : norm_family_iter(fam331, 100)) {
      CHECK(quad_norm(m) == -3);
      CHECK(mpz_divisible_ui_p(m.b().get_mpz_t(), 14));
    }
  }

  TEST_CASE("family members inside a window are found by the search") {
    check_inside_search({2, 3, 1}, gen_231(5), 500);
    check_inside_search({3, 2, 2}, gen_322(5), 1000);
    check_inside_search({3, 2, 3}, gen_323(3), 1000);
    check_inside_search({2, 4, 1}, gen_241(5), 1000);
    check_inside_search({4, 2, 2}, gen_422(2), 1000);
    check_inside_search({3, 3, 1}, gen_331(2), 100);
    check_inside_search({2, 2, 1}, gen_22_by_length(1, 6), 400);
  }

  TEST_CASE("bijective squares") {
    auto r = gen_bijective_square(2, 2);
    CHECK(r.y == 5);
    CHECK(format_digits(r.w) == "(2,1)");
    r = gen_bijective_square(10, 3);
    CHECK(r.y == 1001);
    CHECK(format_digits(r.w) == "(9,10,1)");
    r = gen_bijective_square(37, 2);
    CHECK(format_digits(r.w) == "(37,1)");
    for (long b = 2; b <= 30; ++b) {
      for (unsigned long l = 2; l <= 12; ++l) CHECK(verify_repr_solution(gen_bijective_square(b, l)));
    }
    CHECK_THROWS_AS(gen_bijective_square(5, 1), Error);
  }

  TEST_CASE("repetition patterns") {
    auto digits = [](const std::string& p, unsigned long n) { return format_digits(Word{NumberSystem::bijective, 10, expand_pattern(p, n)}); };
    CHECK(digits("(3^{2n+2})4", 0) == "(3,3,4)");
    CHECK(digits("(3^{2n+2})4", 1) == "(3,3,3,3,4)");
    CHECK(digits("((52)^{n+1})6", 0) == "(5,2,6)");
    CHECK(digits("((15)^{n})2", 0) == "(2)");
    CHECK(digits("((12)^{3})", 7) == "(1,2,1,2,1,2)");
    CHECK_THROWS_AS(expand_pattern("((12)^{3n+3}", 0), Error);
    CHECK_THROWS_AS(expand_pattern("(12)^{n-1}", 0), Error);
    CHECK_THROWS_AS(expand_pattern("1a", 0), Error);
  }

  TEST_CASE("bijective table families") {
    auto r = gen_bijective_table_family(7, 0, 0);
    CHECK(r.y == 172);
    CHECK(format_digits(r.w) == "(1,5,2)");
    r = gen_bijective_table_family(8, 0, 0);
    CHECK(r.y == 5 * 64 + 2 * 8 + 6);
    CHECK(bijective_family_table().size() == 12);
    for (const auto& row : bijective_family_table()) {
      for (unsigned long n = 0; n <= 50; ++n) CHECK(verify_repr_solution(instantiate_bijective_row(row, n)));
    }
    try {
      gen_bijective_table_family(4, 2, 0);
      FAIL("expected unknown-family");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unknown_family);
    }
    CHECK_THROWS_AS(gen_bijective_table_family(10, 0, 0), Error);
    CHECK_THROWS_AS(instantiate_bijective_row({7, "(3^{2n+2})5", "((15)^{n+1})2"}, 0), Error);
  }

  TEST_CASE("Zeckendorf families") {
    auto r = gen_fibonacci_family(1);
    CHECK(r.y == 5236);
    CHECK(format_digits(r.w) == "100001010010010000");
    r = gen_fibonacci_family(2);
    CHECK(r.y == fibonacci(11) + fibonacci(14) + fibonacci(24) + fibonacci(27));
    CHECK(r.y == 243252);
    for (unsigned long n = 1; n <= 200; ++n) CHECK(verify_repr_solution(gen_fibonacci_family(n)));

    CHECK(gen_fibonacci_family2(1).y == 98210);
    CHECK(gen_fibonacci_family2(2).y == 31622994);
    CHECK(format_digits(gen_fibonacci_family2(1).w) == "100100000000100100000010");
    for (unsigned long n = 1; n <= 100; ++n) CHECK(verify_repr_solution(gen_fibonacci_family2(n)));
    CHECK_THROWS_AS(gen_fibonacci_family(0), Error);
  }
}
