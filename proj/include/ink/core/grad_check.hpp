// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ink/core/graph.hpp"

namespace ink {

struct GradCheckOptions {
  double step = 1e-5;
  double tolerance = 1e-4;
  /// Restrict to these parameters; empty means every parameter in the store.
  std::vector<std::string> params;
  /// Check at most this many entries, drawn uniformly; 0 checks all.
  std::size_t max_entries = 0;
  std::uint64_t seed = 0;
};

struct GradCheckEntry {
  std::string param;
  std::size_t index = 0;
  double analytic = 0;
  double numeric = 0;
  double rel_error = 0;
};

struct GradCheckReport {
  std::vector<GradCheckEntry> entries;
  double max_rel_error = 0;
  bool passed = true;
};

/// Compares backward() against central differences. The graph must read its
/// parameters from `store`; each entry is perturbed in place, the graph is
/// re-evaluated with forward(), and the entry is restored. Relative error is
/// |analytic - numeric| / max(1, |analytic|, |numeric|).
GradCheckReport grad_check(Graph& graph, Var loss, ParamStore& store,
                           const GradCheckOptions& options = {});

}  // namespace ink
