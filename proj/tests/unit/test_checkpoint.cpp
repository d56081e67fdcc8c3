#include <doctest.h>

#include <sstream>

#include "reppow/checkpoint.hpp"
#include "reppow/errors.hpp"
#include "reppow/search.hpp"

using namespace reppow;

namespace {

Errc read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_checkpoint(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("checkpoint was accepted: " << text);
  return Errc::out_of_domain;
}

const char* kHeader = R"j({"triple":["2","3","1"]})j";

}  // namespace

TEST_SUITE("checkpoint") {
  TEST_CASE("line formats") {
    CHECK(checkpoint_header_line({2, 3, 1}) == kHeader);
    CHECK(checkpoint_range_line({2, 500}) == R"j({"range":["2","500"]})j");
    CHECK(checkpoint_unresolved_line(77) == R"j({"unresolved":"77"})j");
    const auto rec = solutions_for_base({2, 3, 1}, 18).at(0);
    CHECK(checkpoint_solution_line(rec) ==
          R"j({"solution":{"b":"18","c":"7","l":"1","n":"3","q":"2","w":"(7)","y":"49"}})j");
  }

  TEST_CASE("round trip") {
    const Checkpoint cp = search_range({2, 3, 1}, 2, 320);
    std::stringstream s;
    write_checkpoint(s, cp);
    CHECK(read_checkpoint(s) == cp);
  }

  TEST_CASE("corrupt files are rejected") {
    const std::string h = std::string(kHeader) + "\n";
    CHECK(read_error("") == Errc::checkpoint_error);
    CHECK(read_error("garbage\n") == Errc::checkpoint_error);
    CHECK(read_error(R"j({"range":["2","9"]})j" "\n") == Errc::checkpoint_error);
    CHECK(read_error(h + h) == Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"range":["9","2"]})j") == Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"range":["1","2"]})j") == Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"range":[2,9]})j") == Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"unresolved":"-4"})j") == Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"mystery":"1"})j") == Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"range":["2","9"]}{"range":["10","12"]})j") == Errc::checkpoint_error);
    // perturbed y
    CHECK(read_error(h + R"j({"solution":{"b":"18","c":"7","l":"1","n":"3","q":"2","w":"(7)","y":"50"}})j") ==
          Errc::checkpoint_error);
    // right numbers, wrong triple
    CHECK(read_error(h + R"j({"solution":{"b":"18","c":"7","l":"1","n":"3","q":"3","w":"(7)","y":"49"}})j") ==
          Errc::checkpoint_error);
    CHECK(read_error(h + R"j({"solution":{"b":"18","c":"7","l":"1","n":"3","q":"2","w":"(x)","y":"49"}})j") ==
          Errc::checkpoint_error);
  }

  TEST_CASE("exports") {
    const auto recs = solutions_for_base({2, 3, 1}, 22);
    std::ostringstream csv;
    write_solutions_csv(csv, recs);
    CHECK(csv.str() == "q,n,l,b,y,c,w\n2,3,1,22,39,3,\"(3)\"\n2,3,1,22,78,12,\"(12)\"\n");
    std::ostringstream jl;
    write_solutions_jsonl(jl, recs);
    CHECK(jl.str().find(R"("y":"78")") != std::string::npos);
  }
}
