// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/model/classifier.hpp"

#include <string>

#include "ink/core/error.hpp"
#include "ink/core/parallel.hpp"

namespace ink {

void ClassifierConfig::validate() const {
  if (input_size != 3) throw ContractError("classifier: input size must be 3");
  if (hidden_size < 1 || layers < 1 || projection_size < 1 || alphabet_size < 1) {
    throw ContractError("classifier: every dimension must be at least 1");
  }
}

ClassifierConfig ClassifierConfig::full_scale(std::size_t alphabet_size) {
  ClassifierConfig c;
  c.hidden_size = 512;
  c.projection_size = 256;
  c.alphabet_size = alphabet_size;
  return c;
}

nlohmann::json ClassifierConfig::to_json() const {
  return {{"input_size", input_size},           {"hidden_size", hidden_size},
          {"layers", layers},                   {"projection_size", projection_size},
          {"alphabet_size", alphabet_size},     {"bidirectional", bidirectional}};
}

ClassifierConfig ClassifierConfig::from_json(const nlohmann::json& j) {
  ClassifierConfig c;
  try {
    c.input_size = j.at("input_size").get<std::size_t>();
    c.hidden_size = j.at("hidden_size").get<std::size_t>();
    c.layers = j.at("layers").get<std::size_t>();
    c.projection_size = j.at("projection_size").get<std::size_t>();
    c.alphabet_size = j.at("alphabet_size").get<std::size_t>();
    c.bidirectional = j.at("bidirectional").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("classifier config: ") + e.what());
  }
  c.validate();
  return c;
}

ClassifierModel::ClassifierModel(const ClassifierConfig& config, std::uint64_t seed)
    : config_(config) {
  config_.validate();
  Rng rng(seed);
  for (std::size_t n = 0; n < config_.layers; ++n) {
    forward_cell(n).init(params_, rng);
    if (config_.bidirectional) backward_cell(n).init(params_, rng);
  }
  projection().init(params_, rng);
  output().init(params_, rng);
}

ClassifierModel::ClassifierModel(const ClassifierConfig& config, ParamStore params)
    : config_(config), params_(std::move(params)) {
  config_.validate();
  ClassifierModel reference(config_, 0);
  const ParamStore& want = reference.params_;
  if (want.size() != params_.size()) {
    throw ShapeError("classifier: expected " + std::to_string(want.size()) +
                     " parameters, got " + std::to_string(params_.size()));
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!params_.contains(want.name(i)) ||
        !(params_.at(want.name(i)).shape() == want.at(i).shape())) {
      throw ShapeError("classifier: parameter '" + want.name(i) + "' missing or misshapen");
    }
  }
}

ClassifierModel ClassifierModel::zeros(const ClassifierConfig& config) {
  ClassifierModel m(config, 0);
  for (std::size_t i = 0; i < m.params_.size(); ++i) m.params_.at(i).fill(0);
  return m;
}

std::size_t ClassifierModel::layer_input(std::size_t n) const {
  if (n == 0) return config_.input_size;
  return config_.bidirectional ? 2 * config_.hidden_size : config_.hidden_size;
}

LstmSpec ClassifierModel::forward_cell(std::size_t n) const {
  return {"layer" + std::to_string(n) + "/forward", layer_input(n), config_.hidden_size};
}

LstmSpec ClassifierModel::backward_cell(std::size_t n) const {
  if (!config_.bidirectional) throw ContractError("classifier: model is unidirectional");
  return {"layer" + std::to_string(n) + "/backward", layer_input(n), config_.hidden_size};
}

DenseSpec ClassifierModel::projection() const {
  return {"projection", layer_input(config_.layers), config_.projection_size};
}

DenseSpec ClassifierModel::output() const {
  return {"output", config_.projection_size, config_.alphabet_size};
}

std::vector<Var> classifier_probs(Graph& g, const ClassifierModel& model,
                                  const EncodedSequence& seq) {
  if (seq.length() == 0) throw DataError("classifier: empty sequence");
  const ClassifierConfig& cfg = model.config();
  std::vector<Var> features;
  features.reserve(seq.length());
  for (const auto& row : seq.deltas) {
    features.push_back(g.constant(Array::vector({row[0], row[1], row[2]})));
  }
  for (std::size_t n = 0; n < cfg.layers; ++n) {
    LstmWeights fwd = model.forward_cell(n).bind(g);
    if (cfg.bidirectional) {
      features = birnn_forward(fwd, model.backward_cell(n).bind(g), features);
    } else {
      std::vector<LstmState> states = unroll(fwd, features, zero_lstm_state(g, cfg.hidden_size));
      for (std::size_t t = 0; t < states.size(); ++t) features[t] = states[t].h;
    }
  }
  DenseWeights proj = model.projection().bind(g);
  DenseWeights out = model.output().bind(g);
  std::vector<Var> probs;
  probs.reserve(features.size());
  for (Var f : features) probs.push_back(softmax(dense(out, relu(dense(proj, f)))));
  return probs;
}

std::vector<Categorical> classify(const ClassifierModel& model, const EncodedSequence& seq) {
  Graph g(model.params());
  std::vector<Categorical> out;
  for (Var p : classifier_probs(g, model, seq)) out.emplace_back(p.value().storage());
  return out;
}

Var classifier_loss(Graph& g, const ClassifierModel& model, const EncodedSequence& seq) {
  if (seq.y.size() != seq.length()) throw DataError("classifier: label length mismatch");
  seq.validate(model.config().alphabet_size);
  std::vector<Var> probs = classifier_probs(g, model, seq);
  std::vector<Var> terms;
  terms.reserve(probs.size());
  for (std::size_t t = 0; t < probs.size(); ++t) {
    terms.push_back(cross_entropy(probs[t], static_cast<std::size_t>(seq.y[t])));
  }
  return mean(concat(terms));
}

double classifier_loss(const ClassifierModel& model, const EncodedSequence& seq) {
  Graph g(model.params());
  return classifier_loss(g, model, seq).value().item();
}

ClassifierStepResult classifier_training_step(const ClassifierModel& model,
                                              std::span<const EncodedSequence> batch) {
  if (batch.empty()) throw ContractError("classifier_training_step: empty batch");
  std::vector<double> losses(batch.size());
  std::vector<Gradients> grads(batch.size());
  parallel_for(batch.size(), [&](std::size_t b) {
    Graph g(model.params());
    Var loss = classifier_loss(g, model, batch[b]);
    losses[b] = loss.value().item();
    grads[b] = g.backward(loss);
  });
  const auto n = static_cast<double>(batch.size());
  ClassifierStepResult result{0, Gradients(model.params())};
  for (std::size_t b = 0; b < batch.size(); ++b) {
    result.loss += losses[b] / n;
    result.grads.add(grads[b]);
  }
  result.grads.scale(static_cast<Real>(1.0 / n));
  return result;
}

double stroke_accuracy(const ClassifierModel& model, std::span<const EncodedSequence> seqs) {
  std::vector<std::size_t> correct(seqs.size(), 0);
  parallel_for(seqs.size(), [&](std::size_t i) {
    const auto dists = classify(model, seqs[i]);
    for (std::size_t t = 0; t < dists.size(); ++t) {
      if (dists[t].argmax() == static_cast<std::size_t>(seqs[i].y[t])) ++correct[i];
    }
  });
  std::size_t hits = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    hits += correct[i];
    total += seqs[i].length();
  }
  return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace ink
