// Copyright 2026 The ink authors. Apache 2.0 License.
//
// LSTM cell with stacked gate matrices in (i, f, g, o) order:
//   gates = Wx x + Wh h + b
//   i, f, o = sigmoid(.), g = tanh(.)
//   c' = f * c + i * g,  h' = o * tanh(c')

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ink/core/graph.hpp"
#include "ink/core/param_store.hpp"
#include "ink/core/rng.hpp"

namespace ink {

inline constexpr const char* kGateOrder = "ifgo";

struct LstmWeights {
  Var wx;  // 4H x I
  Var wh;  // 4H x H
  Var b;   // 4H
  std::size_t hidden = 0;
};

struct LstmState {
  Var h;
  Var c;
};

/// Parameters `<prefix>/wx`, `<prefix>/wh`, `<prefix>/b`.
struct LstmSpec {
  std::string prefix;
  std::size_t input_size = 0;
  std::size_t hidden_size = 0;

  /// Weights ~ U(-1/sqrt(H), 1/sqrt(H)); forget-gate bias 1, other biases 0.
  void init(ParamStore& store, Rng& rng) const;
  LstmWeights bind(Graph& g) const;
};

LstmState zero_lstm_state(Graph& g, std::size_t hidden);
LstmState lstm_step(const LstmWeights& cell, Var x, const LstmState& state);
/// States after each input, in order.
std::vector<LstmState> unroll(const LstmWeights& cell, std::span<const Var> inputs,
                              const LstmState& initial);
/// Per step concat(h_forward_t, h_backward_t); the backward cell reads the
/// inputs in reverse. Both cells start from zero state.
std::vector<Var> birnn_forward(const LstmWeights& forward_cell, const LstmWeights& backward_cell,
                               std::span<const Var> inputs);

}  // namespace ink
