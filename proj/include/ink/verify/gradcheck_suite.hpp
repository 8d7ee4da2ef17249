// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Finite-difference checks over every differentiable primitive and the
// composite losses built from them. Inputs are drawn away from kinks
// (relu at 0, clamp bounds) so central differences are meaningful.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ink {

struct SuiteResult {
  std::string name;
  double max_rel_error = 0;
  std::size_t entries = 0;
  bool passed = false;
};

/// Small C-VRNN instance used for the full-loss check.
struct SuiteModelSize {
  std::size_t steps = 4;
  std::size_t hidden = 8;
  std::size_t alphabet = 3;
  std::size_t latent = 4;
};

std::vector<SuiteResult> gradcheck_suite(double tolerance = 1e-3, std::uint64_t seed = 0,
                                         const SuiteModelSize& size = {});

}  // namespace ink
