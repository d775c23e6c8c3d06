#include <fstream>

#include <json.hpp>

#include "sgdol/core/error.hpp"
#include "sgdol/harness/csv.hpp"
#include "sgdol/harness/experiment.hpp"

namespace sgdol {

void write_outputs(const ExperimentSpec& spec, const ResultTable& table) {
  write_csv(table, spec.output);

  nlohmann::ordered_json summary;
  summary["T"] = spec.T;
  summary["repetitions"] = spec.repetitions;
  summary["seed"] = spec.seed;
  summary["report_every"] =
      spec.report_every == 0 ? default_report_every(spec.T) : spec.report_every;
  auto& optimizers = summary["optimizers"];
  optimizers = nlohmann::ordered_json::array();
  for (const auto& series : table.series) {
    nlohmann::ordered_json entry;
    entry["name"] = series.name;
    entry["kind"] = std::string(kind_name(series.kind));
    entry["csv"] = series.name + ".csv";
    entry["points"] = series.points.size();
    entry["output_indices"] = series.output_indices;
    if (!series.points.empty()) {
      const auto& last = series.points.back();
      entry["final_grad_sq_norm"] = last.grad_sq_norm;
      entry["final_stepsize_mean"] = last.stepsize_mean;
    }
    optimizers.push_back(std::move(entry));
  }

  const auto path = spec.output / "summary.json";
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << summary.dump(2) << '\n';
}

}  // namespace sgdol
