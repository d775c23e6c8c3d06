#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sgdol/online/ftrl.hpp"
#include "sgdol/online/surrogate.hpp"

namespace sgdol {

enum class OptimizerKind {
  kSgdolGlobal,
  kSgdolCoord,
  kSgdolMomentum,
  kSgd,
  kAdagradGlobal,
  kAdagradCoord,
  kAdam,
  kSgdGl,
};

std::string_view kind_name(OptimizerKind kind);
std::optional<OptimizerKind> parse_kind(std::string_view name);
bool is_sgdol_family(OptimizerKind kind);

struct OptimizerConfig {
  std::string name;  // label used for output files
  OptimizerKind kind = OptimizerKind::kSgdolGlobal;

  // SGDOL family; also the 1/M cap of sgd_gl.
  double M = 0.0;
  double alpha = kDefaultAlpha;
  // sgdol_global / sgdol_coord only. The momentum variant always uses the
  // doubled convention for both of its learners.
  Curvature curvature = Curvature::kStandard;
  // Diagnostics for the momentum variant: force β_t = 0.
  bool clamp_beta_to_zero = false;
  // Keep per-step surrogate records (needed for regret-bound checks).
  bool keep_regret_steps = false;

  // sgd, adagrad_*, adam
  double lr = 0.0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;

  // sgd_gl: stepsize min(1/M, c·√f_gap / (σ √T)), fixed at construction.
  double gl_sigma = 0.0;
  double gl_horizon = 0.0;
  double gl_f_gap = 0.0;
  double gl_c = 1.0;
};

// Checks only the fields the kind uses; throws ValidationError naming every
// offending field (prefixed with `prefix`).
void validate(const OptimizerConfig& config, const std::string& prefix = "");

// Constant stepsize of sgd_gl.
double sgd_gl_stepsize(const OptimizerConfig& config);

}  // namespace sgdol
