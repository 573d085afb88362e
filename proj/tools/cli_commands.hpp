#pragma once

// The seqinv command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "seqinv/hankel.hpp"

namespace seqinv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_no_solution = 3;
inline constexpr int schema_version = 1;

/// args excludes the program name. Writes one JSON line to `out` (or help
/// text), diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One coordinate per non-empty line; whitespace inside a line is ignored.
VectorSequence read_sequence_text(const std::string& text);
VectorSequence read_sequence_file(const std::string& path);

}  // namespace seqinv::cli
