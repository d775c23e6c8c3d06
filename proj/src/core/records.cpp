#include "sgdol/core/records.hpp"

#include <limits>
#include <numeric>

namespace sgdol {

double TrajectoryRecord::stepsize_mean() const {
  if (stepsize.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::accumulate(stepsize.begin(), stepsize.end(), 0.0) /
         static_cast<double>(stepsize.size());
}

}  // namespace sgdol
