#include "sgdol/oracles/synthetic.hpp"

#include <algorithm>
#include <vector>

#include "sgdol/core/error.hpp"

namespace sgdol {

Dataset make_synthetic_classification(std::size_t rows_per_class, std::size_t n_features,
                                      std::size_t groups, RngStream& rng, bool append_bias) {
  if (rows_per_class == 0 || groups == 0 || n_features < groups) {
    throw ContractViolation("make_synthetic_classification: need rows, groups <= features");
  }
  std::vector<std::size_t> bounds(groups + 1);
  for (std::size_t k = 0; k <= groups; ++k) bounds[k] = k * n_features / groups;

  std::vector<double> weight(n_features);
  for (auto& w : weight) w = rng.normal();

  Dataset data(n_features + (append_bias ? 1 : 0), append_bias);
  std::vector<double> row(data.n_features());
  std::size_t pos = 0, neg = 0;
  while (pos < rows_per_class || neg < rows_per_class) {
    std::fill(row.begin(), row.end(), 0.0);
    double score = rng.normal();
    for (std::size_t k = 0; k < groups; ++k) {
      const std::size_t j = bounds[k] + rng.uniform_index(bounds[k + 1] - bounds[k]);
      row[j] = 1.0;
      score += weight[j];
    }
    if (append_bias) row.back() = 1.0;
    const double label = score > 0.0 ? 1.0 : -1.0;
    std::size_t& count = label > 0 ? pos : neg;
    if (count >= rows_per_class) continue;
    ++count;
    data.add_row(row, label);
  }
  return data;
}

}  // namespace sgdol
