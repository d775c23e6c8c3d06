#pragma once

#include <filesystem>
#include <iosfwd>

#include "sgdol/harness/experiment.hpp"

namespace sgdol {

// INI-style experiment description:
//
//   [experiment]            T, repetitions, seed, report_every, output,
//                           keep_raw, threads
//   [oracle]                kind = rosenbrock | sigmoid | quadratic, plus
//                           sigma | dataset, batch_size, balance, bias |
//                           diagonal, noise, start (comma-separated lists)
//   [optimizer.<name>]      kind and the fields that kind uses; one section
//                           per optimizer, in file order
//
// Relative paths resolve against base_dir. Unknown keys, bad values and
// invalid combinations raise ValidationError; an unreadable file raises
// IoError.
ExperimentSpec parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentSpec load_config(const std::filesystem::path& path);

}  // namespace sgdol
