#include "reppow/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "reppow/arith.hpp"
#include "reppow/checkpoint.hpp"
#include "reppow/errors.hpp"
#include "reppow/verify.hpp"

namespace reppow {

mpz_class compute_defect(const Factorization& f, unsigned long q) {
  mpz_class d = 1;
  for (const auto& [p, e] : f.factors) {
    const unsigned long rounded = q * ((e + q - 1) / q);
    d *= ipow(p, rounded - e);
  }
  return d;
}

std::vector<SolutionRecord> solutions_for_base(const Triple& t, const mpz_class& b, const FactorOptions& options) {
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  const Factorization rf = factor_quotient(b, t.n, t.l, options);
  const mpz_class d = compute_defect(rf, t.q);

  // c = k^q d with b^(l-1) <= c <= b^l - 1
  const mpz_class c_hi = ipow(b, t.l) - 1;
  const mpz_class c_lo = (c_hi + 1) / b;
  mpz_class k_pow_lo, k_pow_hi;
  mpz_cdiv_q(k_pow_lo.get_mpz_t(), c_lo.get_mpz_t(), d.get_mpz_t());
  mpz_fdiv_q(k_pow_hi.get_mpz_t(), c_hi.get_mpz_t(), d.get_mpz_t());
  if (k_pow_lo > k_pow_hi) return {};

  const auto lo_root = iroot(k_pow_lo, t.q);
  mpz_class k = lo_root.exact ? lo_root.root : mpz_class(lo_root.root + 1);
  const mpz_class k_end = iroot(k_pow_hi, t.q).root;

  const auto base_root = iroot(d * rf.value, t.q);
  if (!base_root.exact) throw Error(Errc::out_of_domain, "internal: defect does not complete a q-th power");

  std::vector<SolutionRecord> out;
  for (; k <= k_end; ++k) {
    const mpz_class c = ipow(k, t.q) * d;
    if (c < c_lo || c > c_hi) continue;
    out.push_back(make_record(t, b, k * base_root.root, c));
  }
  return out;
}

std::vector<SolutionRecord> brute_solutions_for_base(const Triple& t, const mpz_class& b) {
  if (b < 2) throw Error(Errc::invalid_base, "base must be >= 2");
  const mpz_class bl = ipow(b, t.l);
  if (bl > kBruteForceLimit) throw Error(Errc::too_large, "b^l exceeds the brute-force limit");
  const mpz_class r = repunit_quotient(b, t.n, t.l);
  std::vector<SolutionRecord> out;
  mpz_class value, root, rem;
  for (mpz_class c = bl / b; c < bl; ++c) {
    value = c * r;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), t.q);
    if (rem == 0) out.push_back(make_record(t, b, root, c));
  }
  return out;
}

void Checkpoint::normalize() {
  std::sort(completed_ranges.begin(), completed_ranges.end(),
            [](const BaseRange& x, const BaseRange& y) { return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi; });
  std::vector<BaseRange> merged;
  for (const auto& r : completed_ranges) {
    if (!merged.empty() && r.lo <= merged.back().hi + 1) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
    } else {
      merged.push_back(r);
    }
  }
  completed_ranges = std::move(merged);

  std::sort(solutions.begin(), solutions.end(), solution_less);
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  std::sort(unresolved_bases.begin(), unresolved_bases.end());
  unresolved_bases.erase(std::unique(unresolved_bases.begin(), unresolved_bases.end()), unresolved_bases.end());
}

bool Checkpoint::covers(std::uint64_t b) const {
  auto it = std::upper_bound(completed_ranges.begin(), completed_ranges.end(), b,
                             [](std::uint64_t v, const BaseRange& r) { return v < r.lo; });
  if (it == completed_ranges.begin()) return false;
  --it;
  return b >= it->lo && b <= it->hi;
}

namespace {

struct ChunkResult {
  BaseRange range;
  std::vector<SolutionRecord> solutions;
  std::vector<std::uint64_t> unresolved;
};

ChunkResult run_chunk(const Triple& t, const BaseRange& range, const FactorOptions& options) {
  ChunkResult res{range, {}, {}};
  for (std::uint64_t b = range.lo; b <= range.hi; ++b) {
    try {
      auto sols = solutions_for_base(t, mpz_class(static_cast<unsigned long>(b)), options);
      res.solutions.insert(res.solutions.end(), sols.begin(), sols.end());
    } catch (const Error& e) {
      if (e.code() != Errc::unresolved_base) throw;
      res.unresolved.push_back(b);
    }
  }
  return res;
}

// Base intervals inside [lo, hi] not yet covered, cut into chunks.
std::vector<BaseRange> pending_chunks(const Checkpoint& cp, std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk) {
  std::vector<BaseRange> gaps;
  std::uint64_t cursor = lo;
  for (const auto& r : cp.completed_ranges) {
    if (r.hi < cursor) continue;
    if (r.lo > hi) break;
    if (r.lo > cursor) gaps.push_back({cursor, std::min(hi, r.lo - 1)});
    cursor = std::max(cursor, r.hi + 1);
    if (cursor > hi) break;
  }
  if (cursor <= hi && (gaps.empty() || gaps.back().hi < cursor)) gaps.push_back({cursor, hi});

  std::vector<BaseRange> chunks;
  for (const auto& g : gaps) {
    for (std::uint64_t s = g.lo; s <= g.hi; s += chunk) {
      chunks.push_back({s, std::min(g.hi, s + chunk - 1)});
      if (g.hi - s < chunk) break;
    }
  }
  return chunks;
}

}  // namespace

Checkpoint search_range(const Triple& t, std::uint64_t b_lo, std::uint64_t b_hi, const SearchOptions& options) {
  if (b_lo < 2 || b_lo > b_hi) throw Error(Errc::out_of_domain, "need 2 <= b_lo <= b_hi");

  Checkpoint cp{t, {}, {}, {}};
  std::ofstream sink;
  if (options.checkpoint_path) {
    const auto& path = *options.checkpoint_path;
    std::error_code ec;
    const bool exists = std::filesystem::exists(path, ec) && std::filesystem::file_size(path, ec) > 0;
    if (exists) {
      cp = load_checkpoint(path);
      if (cp.triple != t) {
        throw Error(Errc::checkpoint_error, "checkpoint " + path.string() + " belongs to triple " +
                                                format_triple(cp.triple));
      }
    }
    sink.open(path, std::ios::app);
    if (!sink) throw Error(Errc::checkpoint_error, "cannot open " + path.string() + " for appending");
    if (!exists) sink << checkpoint_header_line(t) << '\n' << std::flush;
  }

  const auto chunks = pending_chunks(cp, b_lo, b_hi, std::max<std::uint64_t>(1, options.chunk_size));
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      ChunkResult res;
      try {
        res = run_chunk(t, chunks[i], options.factor);
      } catch (...) {
        std::lock_guard lock(merge_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks.size();
        return;
      }
      std::lock_guard lock(merge_mutex);
      if (sink.is_open()) {
        // the range line goes last so a torn write never claims unsearched bases
        for (const auto& s : res.solutions) sink << checkpoint_solution_line(s) << '\n';
        for (auto b : res.unresolved) sink << checkpoint_unresolved_line(b) << '\n';
        sink << checkpoint_range_line(res.range) << '\n' << std::flush;
        if (!sink) {
          if (!failure) failure = std::make_exception_ptr(Error(Errc::checkpoint_error, "checkpoint write failed"));
          next = chunks.size();
          return;
        }
      }
      cp.solutions.insert(cp.solutions.end(), res.solutions.begin(), res.solutions.end());
      cp.unresolved_bases.insert(cp.unresolved_bases.end(), res.unresolved.begin(), res.unresolved.end());
      cp.completed_ranges.push_back(res.range);
    }
  };

  const unsigned nworkers = std::max(1u, options.workers);
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  cp.normalize();
  return cp;
}

}  // namespace reppow
