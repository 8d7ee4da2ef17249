// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/train/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>

#include "ink/core/error.hpp"
#include "ink/core/rng.hpp"
#include "ink/data/corpus_io.hpp"

namespace ink {

namespace {

constexpr std::size_t kBucketWindow = 8;  // batches per length-sorting window
constexpr std::uint64_t kShuffleStream = 0x5348554646ULL;
constexpr std::uint64_t kNoiseStream = 0x4e4f495345ULL;

}  // namespace

void TrainConfig::validate() const {
  if (!(lr0 > 0)) throw ContractError("train: lr0 must be positive");
  if (!(decay_rate > 0 && decay_rate <= 1)) throw ContractError("train: decay must be in (0, 1]");
  if (decay_interval < 1) throw ContractError("train: decay interval must be at least 1");
  if (batch_size < 1) throw ContractError("train: batch size must be at least 1");
}

nlohmann::json TrainConfig::to_json() const {
  return {{"lr0", lr0},
          {"decay_rate", decay_rate},
          {"decay_interval", decay_interval},
          {"epochs", epochs},
          {"batch_size", batch_size},
          {"kl_warmup", kl_warmup},
          {"clip_norm", clip_norm},
          {"checkpoint_every", checkpoint_every},
          {"max_steps", max_steps},
          {"seed", seed}};
}

TrainConfig TrainConfig::from_json(const nlohmann::json& j) {
  TrainConfig c;
  try {
    c.lr0 = j.at("lr0").get<double>();
    c.decay_rate = j.at("decay_rate").get<double>();
    c.decay_interval = j.at("decay_interval").get<std::uint64_t>();
    c.epochs = j.at("epochs").get<std::size_t>();
    c.batch_size = j.at("batch_size").get<std::size_t>();
    c.kl_warmup = j.at("kl_warmup").get<std::uint64_t>();
    c.clip_norm = j.at("clip_norm").get<double>();
    c.checkpoint_every = j.at("checkpoint_every").get<std::size_t>();
    c.max_steps = j.at("max_steps").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("train config: ") + e.what());
  }
  c.validate();
  return c;
}

double lr_schedule(std::uint64_t step, const TrainConfig& config) {
  const auto k = static_cast<double>(step / config.decay_interval);
  return config.lr0 * std::pow(config.decay_rate, k);
}

double kl_weight(std::uint64_t step, const TrainConfig& config) {
  if (config.kl_warmup == 0) return 1.0;
  return std::min(1.0, static_cast<double>(step + 1) / static_cast<double>(config.kl_warmup));
}

std::vector<std::vector<std::size_t>> epoch_batches(std::span<const EncodedSequence> data,
                                                    std::size_t batch_size, std::uint64_t seed,
                                                    std::size_t epoch) {
  Rng rng(Rng::derive(Rng::derive(seed, kShuffleStream), epoch));
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);

  const std::size_t window = batch_size * kBucketWindow;
  for (std::size_t start = 0; start < order.size(); start += window) {
    auto first = order.begin() + static_cast<std::ptrdiff_t>(start);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(std::min(order.size(), start + window));
    std::stable_sort(first, last, [&](std::size_t a, std::size_t b) {
      return data[a].length() < data[b].length();
    });
  }
  std::vector<std::vector<std::size_t>> batches;
  for (std::size_t start = 0; start < order.size(); start += batch_size) {
    const std::size_t end = std::min(order.size(), start + batch_size);
    batches.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(end));
  }
  rng.shuffle(batches);
  return batches;
}

nlohmann::json TrainProgress::to_json() const {
  return {{"step", step}, {"epoch", epoch}, {"batch", batch}};
}

TrainProgress TrainProgress::from_json(const nlohmann::json& j) {
  TrainProgress p;
  try {
    p.step = j.at("step").get<std::uint64_t>();
    p.epoch = j.at("epoch").get<std::size_t>();
    p.batch = j.at("batch").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("train progress: ") + e.what());
  }
  return p;
}

std::string metrics_line(const StepRecord& r) {
  nlohmann::json j = {{"step", r.step},
                      {"lr", r.lr},
                      {"recon_nll", r.loss.recon_nll},
                      {"kl_z", r.loss.kl_z},
                      {"kl_pi", r.loss.kl_pi},
                      {"classification", r.loss.classification},
                      {"eoc_nll", r.loss.eoc_nll},
                      {"total", r.loss.total},
                      {"wall_ms", r.wall_ms}};
  if (r.clipped) j["clipped"] = true;
  return j.dump() + "\n";
}

void run_training(ParamStore& params, AdamState& adam, TrainProgress& progress,
                  std::span<const EncodedSequence> data, const TrainConfig& config,
                  const StepFn& step, const TrainHooks& hooks) {
  config.validate();
  if (data.empty()) throw DataError("train: no training sequences");
  const std::uint64_t noise_seed = Rng::derive(config.seed, kNoiseStream);
  auto budget_left = [&] { return config.max_steps == 0 || progress.step < config.max_steps; };

  while (progress.epoch < config.epochs && budget_left()) {
    const auto batches = epoch_batches(data, config.batch_size, config.seed, progress.epoch);
    while (progress.batch < batches.size() && budget_left()) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<EncodedSequence> batch;
      batch.reserve(batches[progress.batch].size());
      for (std::size_t i : batches[progress.batch]) batch.push_back(data[i]);

      StepRecord record;
      record.step = progress.step;
      record.lr = lr_schedule(progress.step, config);
      StepOutcome outcome;
      try {
        outcome = step(batch, Rng::derive(noise_seed, progress.step),
                       kl_weight(progress.step, config));
        if (config.clip_norm > 0) {
          const double norm = outcome.grads.global_norm();
          if (!std::isfinite(norm)) throw NumericError("train: non-finite gradient norm");
          if (norm > config.clip_norm) {
            outcome.grads.scale(static_cast<Real>(config.clip_norm / norm));
            record.clipped = true;
          }
        }
      } catch (const NumericError&) {
        if (hooks.on_failure) hooks.on_failure(progress);
        throw;
      }
      adam_step(params, outcome.grads, adam, record.lr);
      record.loss = outcome.loss;
      record.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      ++progress.step;
      ++progress.batch;
      if (hooks.on_step) hooks.on_step(record);
    }
    if (progress.batch >= batches.size()) {
      progress.batch = 0;
      ++progress.epoch;
      if (config.checkpoint_every > 0 && progress.epoch % config.checkpoint_every == 0 &&
          hooks.on_checkpoint) {
        hooks.on_checkpoint(progress);
      }
    }
  }
  if (hooks.on_checkpoint) hooks.on_checkpoint(progress);
}

// ---------------------------------------------------------------------------

namespace {

Checkpoint base_checkpoint(const char* kind, nlohmann::json config, const ParamStore& params,
                           const Alphabet& alphabet, const NormStats& stats,
                           const AdamState* adam, const TrainProgress* progress,
                           const TrainConfig* train) {
  Checkpoint c;
  c.kind = kind;
  c.config = std::move(config);
  c.alphabet = alphabet;
  c.stats = stats;
  c.params = params;
  if (adam != nullptr) {
    c.optimizer = adam->to_store(params);
    c.state["adam_step"] = adam->step;
  }
  if (progress != nullptr) c.state["progress"] = progress->to_json();
  if (train != nullptr) c.state["train_config"] = train->to_json();
  return c;
}

// Metrics lines are buffered and the file is rewritten atomically, so a
// reader never sees a torn line.
class MetricsSink {
 public:
  MetricsSink(std::string path, bool keep_existing) : path_(std::move(path)) {
    if (!path_.empty() && keep_existing && std::filesystem::exists(path_)) {
      text_ = read_file(path_);
    }
  }
  void add(const StepRecord& r) { text_ += metrics_line(r); }
  void flush() const {
    if (!path_.empty()) write_file_atomic(path_, text_);
  }

 private:
  std::string path_;
  std::string text_;
};

template <typename Model>
TrainResult train_model(Model& model, std::span<const EncodedSequence> data,
                        const Alphabet& alphabet, const NormStats& stats,
                        const TrainConfig& config, const TrainOutputs& outputs,
                        const Checkpoint* resume, const StepFn& step) {
  AdamState adam(model.params());
  TrainResult result;
  if (resume != nullptr) {
    adam = AdamState::from_store(resume->optimizer, model.params(),
                                 resume->state.value("adam_step", std::uint64_t{0}));
    if (resume->state.contains("progress")) {
      result.progress = TrainProgress::from_json(resume->state.at("progress"));
    }
  }
  MetricsSink metrics(outputs.metrics_path, resume != nullptr);
  auto save = [&](const TrainProgress& p) {
    if (!outputs.checkpoint_path.empty()) {
      save_checkpoint(make_checkpoint(model, alphabet, stats, &adam, &p, &config),
                      outputs.checkpoint_path);
    }
    metrics.flush();
  };
  TrainHooks hooks;
  hooks.on_step = [&](const StepRecord& r) {
    metrics.add(r);
    result.records.push_back(r);
  };
  hooks.on_checkpoint = save;
  hooks.on_failure = save;
  run_training(model.params(), adam, result.progress, data, config, step, hooks);
  return result;
}

}  // namespace

Checkpoint make_checkpoint(const CvrnnModel& model, const Alphabet& alphabet,
                           const NormStats& stats, const AdamState* adam,
                           const TrainProgress* progress, const TrainConfig* config) {
  return base_checkpoint("cvrnn", model.config().to_json(), model.params(), alphabet, stats, adam,
                         progress, config);
}

Checkpoint make_checkpoint(const ClassifierModel& model, const Alphabet& alphabet,
                           const NormStats& stats, const AdamState* adam,
                           const TrainProgress* progress, const TrainConfig* config) {
  return base_checkpoint("classifier", model.config().to_json(), model.params(), alphabet, stats,
                         adam, progress, config);
}

CvrnnModel cvrnn_from_checkpoint(const Checkpoint& ckpt) {
  if (ckpt.kind != "cvrnn") throw DataError("checkpoint holds a '" + ckpt.kind + "' model");
  try {
    return CvrnnModel(CvrnnConfig::from_json(ckpt.config), ckpt.params);
  } catch (const ShapeError& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
}

ClassifierModel classifier_from_checkpoint(const Checkpoint& ckpt) {
  if (ckpt.kind != "classifier") throw DataError("checkpoint holds a '" + ckpt.kind + "' model");
  try {
    return ClassifierModel(ClassifierConfig::from_json(ckpt.config), ckpt.params);
  } catch (const ShapeError& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
}

TrainResult train_cvrnn(CvrnnModel& model, std::span<const EncodedSequence> data,
                        const Alphabet& alphabet, const NormStats& stats,
                        const TrainConfig& config, const TrainOutputs& outputs,
                        const Checkpoint* resume) {
  StepFn step = [&](std::span<const EncodedSequence> batch, std::uint64_t seed, double w) {
    TrainStepOptions options;
    options.kl_weight = static_cast<Real>(w);
    options.seed = seed;
    TrainStepResult r = training_step(model, batch, options);
    return StepOutcome{r.loss, std::move(r.grads)};
  };
  return train_model(model, data, alphabet, stats, config, outputs, resume, step);
}

TrainResult train_classifier(ClassifierModel& model, std::span<const EncodedSequence> data,
                             const Alphabet& alphabet, const NormStats& stats,
                             const TrainConfig& config, const TrainOutputs& outputs,
                             const Checkpoint* resume) {
  StepFn step = [&](std::span<const EncodedSequence> batch, std::uint64_t, double) {
    ClassifierStepResult r = classifier_training_step(model, batch);
    LossBreakdown loss;
    loss.classification = r.loss;
    loss.total = r.loss;
    return StepOutcome{loss, std::move(r.grads)};
  };
  return train_model(model, data, alphabet, stats, config, outputs, resume, step);
}

}  // namespace ink
