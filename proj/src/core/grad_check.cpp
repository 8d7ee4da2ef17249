// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/core/grad_check.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ink/core/error.hpp"
#include "ink/core/rng.hpp"

namespace ink {

GradCheckReport grad_check(Graph& graph, Var loss, ParamStore& store,
                           const GradCheckOptions& options) {
  if (graph.params() != &store) {
    throw ContractError("grad_check: graph is not bound to the given store");
  }
  GradCheckReport report;
  const Gradients analytic = graph.backward(loss);

  std::vector<std::size_t> chosen;
  if (options.params.empty()) {
    for (std::size_t i = 0; i < store.size(); ++i) chosen.push_back(i);
  } else {
    for (const std::string& name : options.params) chosen.push_back(store.index(name));
  }

  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t p : chosen) {
    for (std::size_t k = 0; k < store.at(p).size(); ++k) entries.emplace_back(p, k);
  }
  if (options.max_entries > 0 && entries.size() > options.max_entries) {
    Rng rng(options.seed);
    rng.shuffle(entries);
    entries.resize(options.max_entries);
    std::sort(entries.begin(), entries.end());
  }

  const double h = options.step;
  for (const auto& [p, k] : entries) {
    Real& slot = store.at(p)[k];
    const Real original = slot;
    slot = original + static_cast<Real>(h);
    graph.forward();
    const double plus = graph.value(loss).item();
    slot = original - static_cast<Real>(h);
    graph.forward();
    const double minus = graph.value(loss).item();
    slot = original;

    GradCheckEntry e;
    e.param = store.name(p);
    e.index = k;
    e.analytic = analytic[p][k];
    e.numeric = (plus - minus) / (2 * h);
    const double scale = std::max({1.0, std::abs(e.analytic), std::abs(e.numeric)});
    e.rel_error = std::abs(e.analytic - e.numeric) / scale;
    report.max_rel_error = std::max(report.max_rel_error, e.rel_error);
    if (!(e.rel_error < options.tolerance)) report.passed = false;
    report.entries.push_back(std::move(e));
  }
  if (!entries.empty()) graph.forward();
  return report;
}

}  // namespace ink
