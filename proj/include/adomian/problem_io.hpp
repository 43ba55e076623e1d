#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "adomian/problem.hpp"

namespace adomian {

/// JSON problem documents. Rationals are written as strings ("1/20"); integer
/// JSON numbers are accepted on input. Malformed documents throw ParseError.
ProblemSpec parse_problem_json(std::string_view text);
ProblemSpec load_problem(const std::filesystem::path& path);
std::string problem_to_json(const ProblemSpec& problem);

/// A catalog id, or a path to a JSON problem file when `ref` ends in ".json".
ProblemSpec resolve_problem(const std::string& ref);

}  // namespace adomian
