// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/nn/dense.hpp"

#include <cmath>

namespace ink {

void DenseSpec::init(ParamStore& store, Rng& rng) const {
  const double bound = 1.0 / std::sqrt(static_cast<double>(input_size));
  Array w(Shape::matrix(output_size, input_size));
  for (Real& v : w.data()) v = static_cast<Real>(rng.uniform(-bound, bound));
  store.add(prefix + "/w", std::move(w));
  store.add(prefix + "/b", Array(Shape::vector(output_size)));
}

DenseWeights DenseSpec::bind(Graph& g) const {
  return {g.param(prefix + "/w"), g.param(prefix + "/b")};
}

Var dense(const DenseWeights& layer, Var x) { return matmul(layer.w, x) + layer.b; }

void MlpSpec::init(ParamStore& store, Rng& rng) const {
  hidden().init(store, rng);
  output().init(store, rng);
}

MlpWeights MlpSpec::bind(Graph& g) const { return {hidden().bind(g), output().bind(g)}; }

Var mlp(const MlpWeights& net, Var x) { return dense(net.output, relu(dense(net.hidden, x))); }

}  // namespace ink
