#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "reppow/checkpoint.hpp"
#include "reppow/errors.hpp"
#include "reppow/search.hpp"
#include "reppow/verify.hpp"

using namespace reppow;

namespace {

struct Row {
  long b;
  const char* y;
  const char* w;
};

void check_rows(const std::vector<SolutionRecord>& got, std::initializer_list<Row> want) {
  REQUIRE(got.size() == want.size());
  std::size_t i = 0;
  for (const auto& r : want) {
    CHECK(got[i].b == r.b);
    CHECK(got[i].y == mpz_class(r.y));
    CHECK(format_digits(got[i].w) == r.w);
    CHECK(verify_solution(got[i]));
    ++i;
  }
}

Factorization pf(std::initializer_list<std::pair<long, unsigned long>> ps) {
  std::vector<PrimePower> v;
  for (auto [p, e] : ps) v.push_back({mpz_class(p), e});
  return Factorization::from_prime_powers(std::move(v));
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("reppow_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("defect") {
    CHECK(compute_defect(pf({{7, 3}}), 2) == 7);
    CHECK(compute_defect(pf({{11, 2}}), 2) == 1);
    CHECK(compute_defect(pf({{3, 1}, {13, 2}}), 2) == 3);
    CHECK(compute_defect(pf({{2, 1}, {3, 5}}), 3) == 4 * 3);
    CHECK(compute_defect(Factorization{}, 5) == 1);
  }

  TEST_CASE("solutions at one base") {
    check_rows(solutions_for_base({2, 3, 1}, 18), {{18, "49", "(7)"}});
    check_rows(solutions_for_base({2, 3, 1}, 22), {{22, "39", "(3)"}, {22, "78", "(12)"}});
    CHECK(solutions_for_base({2, 3, 1}, 2).empty());
    check_rows(solutions_for_base({4, 2, 3}, 19), {{19, "70", "(9,13,4)"}});
    CHECK(solutions_for_base({4, 2, 3}, 19)[0].c == 9 * 361 + 13 * 19 + 4);
  }

  TEST_CASE("brute-force oracle agrees on the examples") {
    CHECK(brute_solutions_for_base({2, 3, 1}, 18) == solutions_for_base({2, 3, 1}, 18));
    CHECK(brute_solutions_for_base({2, 3, 1}, 22) == solutions_for_base({2, 3, 1}, 22));
    CHECK(brute_solutions_for_base({2, 3, 1}, 2).empty());
    CHECK(brute_solutions_for_base({4, 2, 3}, 19) == solutions_for_base({4, 2, 3}, 19));
    try {
      brute_solutions_for_base({2, 2, 4}, 100);
      FAIL("expected too-large");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::too_large);
    }
  }

  TEST_CASE("defect scan equals brute force on a small grid") {
    for (unsigned long q = 2; q <= 3; ++q) {
      for (unsigned long n = 2; n <= 3; ++n) {
        for (unsigned long l = 1; l <= 2; ++l) {
          for (long b = 2; b <= 40; ++b) {
            CHECK(solutions_for_base({q, n, l}, b) == brute_solutions_for_base({q, n, l}, b));
          }
        }
      }
    }
  }

  TEST_CASE("range searches") {
    check_rows(search_range({2, 5, 1}, 2, 10000).solutions, {{3, "11", "(1)"}});
    CHECK(search_range({3, 3, 2}, 2, 5000).solutions.empty());
    check_rows(search_range({6, 2, 2}, 2, 300).solutions, {{239, "26", "(22,150)"}});
  }

  TEST_CASE("partition and worker count do not change the result") {
    const Triple t{2, 3, 1};
    const Checkpoint whole = search_range(t, 2, 500);
    CHECK(whole.completed_ranges == std::vector<BaseRange>{{2, 500}});
    for (unsigned workers : {1u, 3u}) {
      for (std::uint64_t chunk : {1ull, 7ull, 1000ull}) {
        SearchOptions o;
        o.workers = workers;
        o.chunk_size = chunk;
        CHECK(search_range(t, 2, 500, o) == whole);
      }
    }
    // piecewise ranges merged through one checkpoint file
    const auto path = temp_file("partition.jsonl");
    SearchOptions o;
    o.checkpoint_path = path;
    search_range(t, 300, 500, o);
    search_range(t, 2, 120, o);
    const Checkpoint merged = search_range(t, 100, 320, o);
    CHECK(merged == whole);
    CHECK(load_checkpoint(path) == whole);
    std::filesystem::remove(path);
  }

  TEST_CASE("resume after an interrupted run") {
    const Triple t{3, 2, 2};
    const Checkpoint full = search_range(t, 2, 800);
    REQUIRE(full.solutions.size() == 30);

    const auto path = temp_file("resume.jsonl");
    SearchOptions o;
    o.checkpoint_path = path;
    o.chunk_size = 50;
    search_range(t, 2, 800, o);
    std::vector<std::string> lines;
    {
      std::ifstream in(path);
      for (std::string s; std::getline(in, s);) lines.push_back(s);
    }
    for (std::size_t keep : {std::size_t{1}, lines.size() / 3, lines.size() / 2, lines.size() - 1}) {
      {
        std::ofstream out(path, std::ios::trunc);
        for (std::size_t i = 0; i < keep; ++i) out << lines[i] << '\n';
      }
      CHECK(search_range(t, 2, 800, o) == full);
    }
    std::filesystem::remove(path);
  }

  TEST_CASE("checkpoint for another triple is refused") {
    const auto path = temp_file("mismatch.jsonl");
    SearchOptions o;
    o.checkpoint_path = path;
    search_range({2, 3, 1}, 2, 30, o);
    const auto before = std::filesystem::file_size(path);
    try {
      search_range({2, 4, 1}, 2, 30, o);
      FAIL("expected checkpoint-error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::checkpoint_error);
    }
    CHECK(std::filesystem::file_size(path) == before);
    std::filesystem::remove(path);
  }

  TEST_CASE("unresolved bases are recorded") {
    // b^8 + 1 here leaves a 43-digit cofactor after trial division; a 0 ms budget stops rho
    SearchOptions o;
    o.factor.budget = std::chrono::milliseconds(0);
    const Checkpoint cp = search_range({2, 2, 8}, 1000003, 1000003, o);
    CHECK(cp.covers(1000003));
    CHECK(cp.unresolved_bases == std::vector<std::uint64_t>{1000003});
    CHECK(cp.solutions.empty());
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(search_range({2, 3, 1}, 1, 10), Error);
    CHECK_THROWS_AS(search_range({2, 3, 1}, 10, 9), Error);
    CHECK_THROWS_AS(solutions_for_base({2, 3, 1}, 1), Error);
  }

  TEST_CASE("Zeckendorf squares") {
    const auto small = search_fib_squares(100);
    REQUIRE(small.size() == 2);
    CHECK(small[0].y == 4);
    CHECK(format_digits(small[0].w) == "100");
    CHECK(small[1].y == 49);
    CHECK(format_digits(small[1].w) == "10100100");
    CHECK(search_fib_squares(4).empty());
    const auto upto = search_fib_squares(250000);
    REQUIRE(upto.size() == 12);
    CHECK(upto.back().y == 243252);
  }

  TEST_CASE("Zeckendorf powers") {
    const auto fourth = search_fib_powers(4, 2, 100);
    REQUIRE(fourth.size() == 2);
    CHECK(fourth[0].y == 2);
    CHECK(format_digits(fourth[0].w) == "100");
    CHECK(fourth[1].y == 7);
    CHECK(format_digits(fourth[1].w) == "10100100");
    CHECK(search_fib_powers(3, 2, 1000).empty());
    const auto sq = search_fib_powers(2, 2, 10);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].y == 4);
    for (const auto& r : fourth) CHECK(verify_repr_solution(r));
  }
}
