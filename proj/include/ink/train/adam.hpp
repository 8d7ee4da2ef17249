// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <cstdint>
#include <vector>

#include "ink/core/array.hpp"
#include "ink/core/param_store.hpp"

namespace ink {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<Array> m;
  std::vector<Array> v;
  std::uint64_t step = 0;

  AdamState() = default;
  /// Zero moments shaped like `params`.
  explicit AdamState(const ParamStore& params);

  /// Moments as "m/<name>", "v/<name>" entries for a checkpoint.
  ParamStore to_store(const ParamStore& params) const;
  /// Inverse of to_store; throws ShapeError when shapes disagree.
  static AdamState from_store(const ParamStore& moments, const ParamStore& params,
                              std::uint64_t step);
};

/// Bias-corrected Adam update:
///   m = b1 m + (1 - b1) g,  v = b2 v + (1 - b2) g^2
///   p -= lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
void adam_step(ParamStore& params, const Gradients& grads, AdamState& state, double lr,
               const AdamConfig& config = {});

}  // namespace ink
