// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <cstddef>
#include <string>

#include "ink/core/graph.hpp"
#include "ink/core/param_store.hpp"
#include "ink/core/rng.hpp"

namespace ink {

struct DenseWeights {
  Var w;
  Var b;
};

/// Affine layer `out x in`; parameters `<prefix>/w`, `<prefix>/b`.
struct DenseSpec {
  std::string prefix;
  std::size_t input_size = 0;
  std::size_t output_size = 0;

  /// w ~ U(-1/sqrt(in), 1/sqrt(in)), b = 0.
  void init(ParamStore& store, Rng& rng) const;
  DenseWeights bind(Graph& g) const;
};

Var dense(const DenseWeights& layer, Var x);

struct MlpWeights {
  DenseWeights hidden;
  DenseWeights output;
};

/// One rectified-linear hidden layer followed by a linear output layer.
struct MlpSpec {
  std::string prefix;
  std::size_t input_size = 0;
  std::size_t hidden_size = 0;
  std::size_t output_size = 0;

  DenseSpec hidden() const { return {prefix + "/hidden", input_size, hidden_size}; }
  DenseSpec output() const { return {prefix + "/out", hidden_size, output_size}; }
  void init(ParamStore& store, Rng& rng) const;
  MlpWeights bind(Graph& g) const;
};

Var mlp(const MlpWeights& net, Var x);

}  // namespace ink
