#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/fin_vec.hpp"
#include "schreier/schreier_core.hpp"

namespace schreier::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kPropertyFailure = 1, kUsageError = 2 };

// "3:1.5, 7:-2" -> FinVec. Whitespace is ignored, indices are positive
// decimal integers, values decimal floats; a repeated index is an error.
// The empty string is the zero vector.
FinVec parse_vector_literal(std::string_view text);

// "1, 2, 5" -> FinSet; elements must be positive and strictly increasing.
FinSet parse_set_literal(std::string_view text);

// Runs the command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schreier::cli
