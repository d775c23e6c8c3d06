#include "sgdol/harness/cli.hpp"

#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "sgdol/core/error.hpp"
#include "sgdol/diagnostics/diagnostics.hpp"
#include "sgdol/harness/config_file.hpp"
#include "sgdol/harness/csv.hpp"
#include "sgdol/harness/experiment.hpp"
#include "sgdol/kernels/kernels.hpp"
#include "sgdol/oracles/dataset.hpp"

namespace sgdol {
namespace {

int do_run(const std::string& config_path, std::ostream& out) {
  const ExperimentSpec spec = load_config(config_path);
  const ResultTable table = run_experiment(spec);
  write_outputs(spec, table);
  for (const auto& series : table.series) {
    out << series.name << " (" << kind_name(series.kind) << "): " << series.points.size()
        << " points";
    if (!series.points.empty()) {
      out << ", final grad_sq_norm " << format_number(series.points.back().grad_sq_norm);
    }
    out << '\n';
  }
  out << "wrote " << spec.output.string() << '\n';
  return kExitOk;
}

int do_parse_libsvm(const std::string& path, bool bias, std::size_t n_features,
                    std::ostream& out) {
  LibsvmOptions options;
  options.append_bias = bias;
  options.n_features = n_features;
  const Dataset data = load_libsvm(path, options);
  const std::size_t raw = data.n_features() - (data.has_bias() ? 1 : 0);
  std::size_t positives = 0;
  for (std::size_t r = 0; r < data.size(); ++r) positives += data.label(r) > 0 ? 1 : 0;
  out << data.size() << " rows, " << raw << " features";
  if (data.has_bias()) out << " (+1 bias column)";
  out << "; " << positives << " positive, " << data.size() - positives << " negative\n";
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic optimization with stepsizes learned online"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment described by a config file");
  run_cmd->add_option("config", config_path, "Experiment config (INI)")->required();

  diagnostics::VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in diagnostic checks");
  verify_cmd->add_option("--seed", verify_options.seed, "Seed for the statistical checks");
  verify_cmd->add_option("--samples", verify_options.descent_samples,
                         "Monte Carlo samples per descent check");

  std::string dataset_path;
  bool no_bias = false;
  std::size_t n_features = 0;
  auto* parse_cmd = app.add_subcommand("parse-libsvm", "Validate a LibSVM dataset");
  parse_cmd->add_option("path", dataset_path, "Dataset file")->required();
  parse_cmd->add_flag("--no-bias", no_bias, "Do not append the constant bias feature");
  parse_cmd->add_option("--n-features", n_features, "Feature count (default: inferred)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (*run_cmd) return do_run(config_path, out);
    if (*verify_cmd) {
      out << "kernels: " << kernels::active().name << '\n';
      return diagnostics::run_verify_suite(out, verify_options) ? kExitOk : kExitValidation;
    }
    if (*parse_cmd) return do_parse_libsvm(dataset_path, !no_bias, n_features, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace sgdol
