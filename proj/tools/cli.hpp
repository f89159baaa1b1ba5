#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace mmpair::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes every shipped fixture (algebras, pairs, ansatz spaces, the catalog
/// in DSL form) into `dir`. Returns the written file names.
std::vector<std::string> write_examples(const std::filesystem::path& dir);

} // namespace mmpair::cli
