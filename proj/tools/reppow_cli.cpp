// reppow: search, generate and verify powers whose digits repeat a block.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 checkpoint error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reppow/checkpoint.hpp"
#include "reppow/corpus.hpp"
#include "reppow/errors.hpp"
#include "reppow/families.hpp"
#include "reppow/search.hpp"
#include "reppow/triples.hpp"
#include "reppow/word.hpp"

namespace {

using namespace reppow;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCheckpoint = 3 };

mpz_class to_mpz(const std::string& s, const char* what) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw CLI::ValidationError(what, "not an integer: " + s);
  return v;
}

struct SearchArgs {
  unsigned long q = 2, n = 2, l = 1;
  std::uint64_t b_lo = 2, b_hi = 2;
  unsigned workers = 1;
  std::uint64_t chunk = 128;
  std::string checkpoint;
  long budget_ms = 0;
  std::string format = "csv";
};

int run_search(const SearchArgs& a) {
  const Triple t = make_triple(a.q, a.n, a.l);
  if (a.b_lo < 2 || a.b_lo > a.b_hi) throw CLI::ValidationError("--b-lo/--b-hi", "need 2 <= b-lo <= b-hi");
  SearchOptions opts;
  opts.workers = a.workers;
  opts.chunk_size = a.chunk;
  if (!a.checkpoint.empty()) opts.checkpoint_path = a.checkpoint;
  if (a.budget_ms > 0) opts.factor.budget = std::chrono::milliseconds(a.budget_ms);

  const Checkpoint cp = search_range(t, a.b_lo, a.b_hi, opts);
  std::vector<SolutionRecord> in_range;
  for (const auto& s : cp.solutions) {
    if (s.b >= a.b_lo && s.b <= a.b_hi) in_range.push_back(s);
  }
  if (a.format == "jsonl") {
    write_solutions_jsonl(std::cout, in_range);
  } else {
    write_solutions_csv(std::cout, in_range);
  }
  for (auto b : cp.unresolved_bases) {
    if (b >= a.b_lo && b <= a.b_hi) std::cerr << "unresolved base " << b << '\n';
  }
  return kOk;
}

struct GenerateArgs {
  std::string triple = "2,2,1";
  std::size_t count = 10;
  std::string system = "canonical";
  std::string base;
  long row = -1;
  unsigned family = 1;
  std::string format = "csv";
};

int run_generate(const GenerateArgs& a) {
  const NumberSystem sys = parse_system(a.system);
  if (sys == NumberSystem::canonical) {
    std::optional<mpz_class> base;
    if (!a.base.empty()) base = to_mpz(a.base, "--base");
    const auto recs = generate_for_triple(parse_triple(a.triple), a.count, base);
    if (a.format == "jsonl") {
      write_solutions_jsonl(std::cout, recs);
    } else {
      write_solutions_csv(std::cout, recs);
    }
    return kOk;
  }

  std::vector<ReprSolution> recs;
  if (sys == NumberSystem::bijective) {
    const mpz_class b = a.base.empty() ? mpz_class(2) : to_mpz(a.base, "--base");
    for (std::size_t i = 0; i < a.count; ++i) {
      if (a.row >= 0) {
        if (!b.fits_ulong_p()) throw Error(Errc::unknown_family, "no table rows for base " + b.get_str());
        recs.push_back(gen_bijective_table_family(b.get_ui(), static_cast<std::size_t>(a.row), i));
      } else {
        recs.push_back(gen_bijective_square(b, i + 2));
      }
    }
  } else {
    if (a.family != 1 && a.family != 2) throw CLI::ValidationError("--family", "must be 1 or 2");
    for (std::size_t i = 1; i <= a.count; ++i) {
      recs.push_back(a.family == 1 ? gen_fibonacci_family(i) : gen_fibonacci_family2(i));
    }
  }
  if (a.format == "jsonl") {
    write_repr_jsonl(std::cout, recs);
  } else {
    write_repr_csv(std::cout, recs);
  }
  return kOk;
}

int run_classify(unsigned long q, unsigned long n, unsigned long l) {
  const Triple t = make_triple(q, n, l);
  std::cout << (is_admissible(t) ? "admissible" : "inadmissible") << " F=" << format_rational(F_value(t)) << '\n';
  return kOk;
}

int run_verify(const std::string& path, bool verbose, unsigned long family_n) {
  std::vector<TableCorpus> corpora;
  if (std::filesystem::is_directory(path)) {
    corpora = load_corpus_dir(path);
  } else {
    corpora.push_back(load_corpus(path));
  }
  std::size_t failed = 0;
  for (const auto& c : corpora) {
    const auto report = verify_corpus(c, family_n);
    print_report(std::cout, report, verbose);
    failed += report.failures();
  }
  return failed ? kVerifyFailed : kOk;
}

int run_factor(const std::string& b_text, unsigned long n, unsigned long l, long budget_ms) {
  const mpz_class b = to_mpz(b_text, "--b");
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  if (n < 2 || l < 1) throw Error(Errc::out_of_domain, "need n >= 2 and l >= 1");
  FactorOptions opts;
  if (budget_ms > 0) opts.budget = std::chrono::milliseconds(budget_ms);

  const auto idx = cyclotomic_indices(n, l);
  const auto polys = cyclotomic_split(n, l);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const mpz_class v = polys[i].evaluate(b);
    std::cout << "Phi_" << idx[i] << "(b) = " << v << " = " << factor_cyclotomic_value(v, idx[i], opts).str() << '\n';
  }
  const Factorization f = factor_quotient(b, n, l, opts);
  std::cout << "r = " << f.value << " = " << f.str() << '\n';
  return kOk;
}

int run_repr(const std::string& x_text, const std::string& base_text, const std::string& system) {
  const mpz_class x = to_mpz(x_text, "--x");
  const NumberSystem sys = parse_system(system);
  const mpz_class b = sys == NumberSystem::zeckendorf ? mpz_class(0) : to_mpz(base_text, "--base");
  std::cout << format_word(to_system(sys, x, b)) << '\n';
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::checkpoint_error: return kCheckpoint;
    case Errc::bad_family: return kVerifyFailed;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Powers whose base-b digits are a repeated block"};
  app.require_subcommand(1);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search a base range for one triple");
  search->add_option("--q", sa.q, "exponent q")->required()->check(CLI::Range(2ul, 1000ul));
  search->add_option("--n", sa.n, "repetition count n")->required()->check(CLI::Range(2ul, 1000ul));
  search->add_option("--l", sa.l, "block length l")->required()->check(CLI::Range(1ul, 1000ul));
  search->add_option("--b-lo", sa.b_lo, "first base")->required();
  search->add_option("--b-hi", sa.b_hi, "last base (inclusive)")->required();
  search->add_option("--workers", sa.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  search->add_option("--chunk", sa.chunk, "bases per work unit")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", sa.checkpoint, "JSONL checkpoint to resume from and append to");
  search->add_option("--factor-budget", sa.budget_ms, "per-number factoring budget in ms (0 = none)");
  search->add_option("--format", sa.format)->check(CLI::IsMember({"csv", "jsonl"}));

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Emit members of a constructive family");
  generate->add_option("--triple", ga.triple, "q,n,l (canonical system)");
  generate->add_option("--count", ga.count, "number of members")->check(CLI::PositiveNumber);
  generate->add_option("--system", ga.system)->check(CLI::IsMember({"canonical", "bijective", "fibonacci"}));
  generate->add_option("--base", ga.base, "fixed base: (2,2,l) by base, or the bijective base");
  generate->add_option("--row", ga.row, "bijective table row for --base (0-based)");
  generate->add_option("--family", ga.family, "Zeckendorf family 1 or 2");
  generate->add_option("--format", ga.format)->check(CLI::IsMember({"csv", "jsonl"}));

  unsigned long cq = 0, cn = 0, cl = 0;
  auto* classify = app.add_subcommand("classify", "Admissibility and F(q,n,l)");
  classify->add_option("Q", cq)->required();
  classify->add_option("N", cn)->required();
  classify->add_option("L", cl)->required();

  std::string corpus;
  bool verbose = false;
  unsigned long family_n = 50;
  auto* verify = app.add_subcommand("verify", "Verify a solution table (file or directory)");
  verify->add_option("--corpus", corpus)->required();
  verify->add_flag("-v,--verbose", verbose, "print passing rows too");
  verify->add_option("--family-n", family_n, "check family rows for n = 0..N");

  std::string fb;
  unsigned long fn = 2, fl = 1;
  long fbudget = 0;
  auto* factor_cmd = app.add_subcommand("factor", "Factor (b^(n l) - 1)/(b^l - 1)");
  factor_cmd->add_option("--b", fb)->required();
  factor_cmd->add_option("--n", fn)->required();
  factor_cmd->add_option("--l", fl)->required();
  factor_cmd->add_option("--budget", fbudget, "factoring budget in ms (0 = none)");

  std::string rx, rbase, rsys = "canonical";
  auto* repr = app.add_subcommand("repr", "Write x in a number system");
  repr->add_option("--x", rx)->required();
  repr->add_option("--base", rbase);
  repr->add_option("--system", rsys)->check(CLI::IsMember({"canonical", "bijective", "fibonacci", "zeckendorf"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*search) return run_search(sa);
    if (*generate) return run_generate(ga);
    if (*classify) return run_classify(cq, cn, cl);
    if (*verify) return run_verify(corpus, verbose, family_n);
    if (*factor_cmd) return run_factor(fb, fn, fl, fbudget);
    if (*repr) {
      if (rsys != "fibonacci" && rsys != "zeckendorf" && rbase.empty()) {
        throw CLI::ValidationError("--base", "required for canonical and bijective");
      }
      return run_repr(rx, rbase, rsys);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
