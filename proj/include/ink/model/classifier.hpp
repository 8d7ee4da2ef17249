// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Stroke-level character recognizer: a stack of bidirectional LSTM layers,
// a rectified-linear projection and a softmax over the alphabet at every
// point. Layer n reads the concatenated forward/backward features of layer
// n - 1. With `bidirectional` off the same stack runs forward cells only.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ink/core/graph.hpp"
#include "ink/core/param_store.hpp"
#include "ink/data/ink.hpp"
#include "ink/dist/distributions.hpp"
#include "ink/nn/dense.hpp"
#include "ink/nn/lstm.hpp"
#include "json.hpp"

namespace ink {

struct ClassifierConfig {
  std::size_t input_size = 3;
  std::size_t hidden_size = 32;
  std::size_t layers = 3;
  std::size_t projection_size = 16;
  std::size_t alphabet_size = 5;
  bool bidirectional = true;

  void validate() const;
  /// 512-unit cells and a 256-unit projection.
  static ClassifierConfig full_scale(std::size_t alphabet_size);

  nlohmann::json to_json() const;
  static ClassifierConfig from_json(const nlohmann::json& j);
};

class ClassifierModel {
 public:
  ClassifierModel(const ClassifierConfig& config, std::uint64_t seed);
  ClassifierModel(const ClassifierConfig& config, ParamStore params);
  static ClassifierModel zeros(const ClassifierConfig& config);

  const ClassifierConfig& config() const { return config_; }
  ParamStore& params() { return params_; }
  const ParamStore& params() const { return params_; }

  /// Cells of layer `n`; `backward` is only valid for bidirectional models.
  LstmSpec forward_cell(std::size_t n) const;
  LstmSpec backward_cell(std::size_t n) const;
  DenseSpec projection() const;
  DenseSpec output() const;

 private:
  std::size_t layer_input(std::size_t n) const;

  ClassifierConfig config_;
  ParamStore params_;
};

/// Per-step class probabilities as graph nodes.
std::vector<Var> classifier_probs(Graph& g, const ClassifierModel& model,
                                  const EncodedSequence& seq);

/// One distribution per point. Throws DataError on an empty sequence.
std::vector<Categorical> classify(const ClassifierModel& model, const EncodedSequence& seq);

/// Mean per-step cross-entropy against seq.y.
Var classifier_loss(Graph& g, const ClassifierModel& model, const EncodedSequence& seq);
double classifier_loss(const ClassifierModel& model, const EncodedSequence& seq);

struct ClassifierStepResult {
  double loss = 0;  // mean over the batch
  Gradients grads;
};

ClassifierStepResult classifier_training_step(const ClassifierModel& model,
                                              std::span<const EncodedSequence> batch);

/// Fraction of points whose argmax matches y, pooled over all sequences.
double stroke_accuracy(const ClassifierModel& model, std::span<const EncodedSequence> seqs);

}  // namespace ink
