#include "sgdol/optimizers/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "sgdol/core/error.hpp"

namespace sgdol {
namespace {

constexpr std::array<std::pair<OptimizerKind, std::string_view>, 8> kNames{{
    {OptimizerKind::kSgdolGlobal, "sgdol_global"},
    {OptimizerKind::kSgdolCoord, "sgdol_coord"},
    {OptimizerKind::kSgdolMomentum, "sgdol_momentum"},
    {OptimizerKind::kSgd, "sgd"},
    {OptimizerKind::kAdagradGlobal, "adagrad_global"},
    {OptimizerKind::kAdagradCoord, "adagrad_coord"},
    {OptimizerKind::kAdam, "adam"},
    {OptimizerKind::kSgdGl, "sgd_gl"},
}};

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

std::string_view kind_name(OptimizerKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<OptimizerKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_sgdol_family(OptimizerKind kind) {
  return kind == OptimizerKind::kSgdolGlobal || kind == OptimizerKind::kSgdolCoord ||
         kind == OptimizerKind::kSgdolMomentum;
}

void validate(const OptimizerConfig& c, const std::string& prefix) {
  std::vector<std::string> bad;
  auto need = [&](bool ok, const char* field) {
    if (!ok) bad.push_back(prefix + field);
  };
  switch (c.kind) {
    case OptimizerKind::kSgdolGlobal:
    case OptimizerKind::kSgdolCoord:
    case OptimizerKind::kSgdolMomentum:
      need(positive(c.M), "M");
      need(positive(c.alpha), "alpha");
      break;
    case OptimizerKind::kSgd:
    case OptimizerKind::kAdagradGlobal:
    case OptimizerKind::kAdagradCoord:
      need(positive(c.lr), "lr");
      break;
    case OptimizerKind::kAdam:
      need(positive(c.lr), "lr");
      need(c.adam_beta1 >= 0.0 && c.adam_beta1 < 1.0, "beta1");
      need(c.adam_beta2 >= 0.0 && c.adam_beta2 < 1.0, "beta2");
      need(positive(c.adam_epsilon), "epsilon");
      break;
    case OptimizerKind::kSgdGl:
      need(positive(c.M), "M");
      need(c.gl_sigma >= 0.0 && std::isfinite(c.gl_sigma), "sigma");
      need(c.gl_horizon >= 1.0, "T");
      need(c.gl_f_gap >= 0.0 && std::isfinite(c.gl_f_gap), "f_gap");
      need(positive(c.gl_c), "c");
      break;
  }
  if (!bad.empty()) throw ValidationError(std::move(bad), std::string(kind_name(c.kind)));
}

double sgd_gl_stepsize(const OptimizerConfig& c) {
  const double cap = 1.0 / c.M;
  if (c.gl_sigma == 0.0) return cap;
  return std::min(cap, c.gl_c * std::sqrt(c.gl_f_gap) / (c.gl_sigma * std::sqrt(c.gl_horizon)));
}

}  // namespace sgdol
