#pragma once

// Bundled solution tables (CSV) and the verification harness over them.
//
// Two file layouts, both with optional leading `# name: ...` and
// `# source: ...` comment lines:
//   system,q,n,l,b,y,w      one solution per row; w is the rest of the line
//   b,y_pattern,w_pattern   bijective families, instantiated for n = 0..N

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reppow/families.hpp"
#include "reppow/solution.hpp"

namespace reppow {

struct CorpusRow {
  std::size_t line = 0;
  std::optional<SolutionRecord> solution;  // canonical rows
  std::optional<ReprSolution> repr;        // bijective / Zeckendorf rows
  std::optional<BijectiveFamilyRow> family;
  std::optional<std::size_t> declared_length;  // the l column of repr rows
};

struct TableCorpus {
  std::string name;
  std::string source;
  std::vector<CorpusRow> rows;
};

struct RowResult {
  std::size_t line = 0;
  std::string label;
  std::optional<std::string> failure;
};

struct CorpusReport {
  std::string name;
  std::vector<RowResult> rows;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Throws Error{malformed_corpus} naming the offending line.
TableCorpus read_corpus(std::istream& in, const std::string& default_name = "corpus");
TableCorpus load_corpus(const std::filesystem::path& path);
/// Every *.csv below `dir`, sorted by file name.
std::vector<TableCorpus> load_corpus_dir(const std::filesystem::path& dir);

/// Family rows are checked for n = 0..family_n_max.
CorpusReport verify_corpus(const TableCorpus& corpus, unsigned long family_n_max = 50);

void print_report(std::ostream& out, const CorpusReport& report, bool verbose = false);

}  // namespace reppow
