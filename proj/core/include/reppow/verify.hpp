#pragma once

#include <optional>
#include <string>

#include "reppow/solution.hpp"

namespace reppow {

/// Name of the first violated invariant, or nullopt when the record is a
/// genuine solution. Everything is recomputed from scratch, digits included.
std::optional<std::string> solution_failure(const SolutionRecord& rec);
bool verify_solution(const SolutionRecord& rec);

std::optional<std::string> repr_failure(const ReprSolution& rec);
bool verify_repr_solution(const ReprSolution& rec);

}  // namespace reppow
