#pragma once

// Line-delimited JSON checkpoint files and CSV/JSONL solution export.
//
// Checkpoint lines, integers as decimal strings:
//   {"triple":["q","n","l"]}            first line, identifies the search
//   {"range":["lo","hi"]}               a completed inclusive base interval
//   {"solution":{"q":..,"n":..,"l":..,"b":..,"y":..,"c":..,"w":"(d1,...)"}}
//   {"unresolved":"b"}                  factoring budget exceeded at base b

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "reppow/search.hpp"

namespace reppow {

std::string checkpoint_header_line(const Triple& t);
std::string checkpoint_range_line(const BaseRange& r);
std::string checkpoint_solution_line(const SolutionRecord& rec);
std::string checkpoint_unresolved_line(std::uint64_t b);

/// Parses and validates a checkpoint (every solution re-verified). Any
/// problem raises Error{checkpoint_error}.
Checkpoint read_checkpoint(std::istream& in);
Checkpoint load_checkpoint(const std::filesystem::path& path);

void write_checkpoint(std::ostream& out, const Checkpoint& cp);

void write_solutions_csv(std::ostream& out, const std::vector<SolutionRecord>& records, bool header = true);
void write_solutions_jsonl(std::ostream& out, const std::vector<SolutionRecord>& records);

void write_repr_csv(std::ostream& out, const std::vector<ReprSolution>& records, bool header = true);
void write_repr_jsonl(std::ostream& out, const std::vector<ReprSolution>& records);

}  // namespace reppow
