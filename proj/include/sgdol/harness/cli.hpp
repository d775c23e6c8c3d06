#pragma once

#include <iosfwd>

namespace sgdol {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Subcommands:
//   run <config>          run an experiment, write CSV + summary.json
//   verify                run the built-in diagnostic checks
//   parse-libsvm <path>   validate a dataset and print its size
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgdol
