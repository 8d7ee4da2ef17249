// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/nn/lstm.hpp"

#include <cmath>

#include "ink/core/error.hpp"

namespace ink {

void LstmSpec::init(ParamStore& store, Rng& rng) const {
  const std::size_t h = hidden_size;
  const double bound = 1.0 / std::sqrt(static_cast<double>(h));
  Array wx(Shape::matrix(4 * h, input_size));
  Array wh(Shape::matrix(4 * h, h));
  for (Real& v : wx.data()) v = static_cast<Real>(rng.uniform(-bound, bound));
  for (Real& v : wh.data()) v = static_cast<Real>(rng.uniform(-bound, bound));
  Array b(Shape::vector(4 * h));
  for (std::size_t k = h; k < 2 * h; ++k) b[k] = 1;
  store.add(prefix + "/wx", std::move(wx));
  store.add(prefix + "/wh", std::move(wh));
  store.add(prefix + "/b", std::move(b));
}

LstmWeights LstmSpec::bind(Graph& g) const {
  LstmWeights w{g.param(prefix + "/wx"), g.param(prefix + "/wh"), g.param(prefix + "/b"),
                hidden_size};
  const Array& wx = w.wx.value();
  if (wx.rows() != 4 * hidden_size || wx.cols() != input_size) {
    throw ShapeError("lstm '" + prefix + "': stored wx has shape " + wx.shape().str());
  }
  return w;
}

LstmState zero_lstm_state(Graph& g, std::size_t hidden) {
  Var zero = g.constant(Array(Shape::vector(hidden)));
  return {zero, zero};
}

LstmState lstm_step(const LstmWeights& cell, Var x, const LstmState& state) {
  const std::size_t h = cell.hidden;
  Var gates = matmul(cell.wx, x) + matmul(cell.wh, state.h) + cell.b;
  Var i = sigmoid(slice(gates, 0, h));
  Var f = sigmoid(slice(gates, h, h));
  Var g = tanh(slice(gates, 2 * h, h));
  Var o = sigmoid(slice(gates, 3 * h, h));
  Var c = f * state.c + i * g;
  return {o * tanh(c), c};
}

std::vector<LstmState> unroll(const LstmWeights& cell, std::span<const Var> inputs,
                              const LstmState& initial) {
  std::vector<LstmState> states;
  states.reserve(inputs.size());
  LstmState s = initial;
  for (const Var& x : inputs) {
    s = lstm_step(cell, x, s);
    states.push_back(s);
  }
  return states;
}

std::vector<Var> birnn_forward(const LstmWeights& forward_cell, const LstmWeights& backward_cell,
                               std::span<const Var> inputs) {
  if (inputs.empty()) return {};
  Graph& g = *inputs.front().graph;
  const auto fwd = unroll(forward_cell, inputs, zero_lstm_state(g, forward_cell.hidden));
  std::vector<Var> reversed(inputs.rbegin(), inputs.rend());
  const auto bwd = unroll(backward_cell, reversed, zero_lstm_state(g, backward_cell.hidden));
  std::vector<Var> out;
  out.reserve(inputs.size());
  const std::size_t t_max = inputs.size();
  for (std::size_t t = 0; t < t_max; ++t) {
    out.push_back(concat({fwd[t].h, bwd[t_max - 1 - t].h}));
  }
  return out;
}

}  // namespace ink
