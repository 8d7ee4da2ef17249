// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Minibatch training loop shared by both model kinds. Each epoch the
// sequences are shuffled with a seed derived from (seed, epoch), grouped into
// windows of eight batches, sorted by length inside each window and cut into
// batches whose order is shuffled again. Every sequence is evaluated on its
// own graph, so no padding is needed and the loss of a sequence covers
// exactly its own points.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ink/data/ink.hpp"
#include "ink/model/checkpoint.hpp"
#include "ink/model/classifier.hpp"
#include "ink/model/cvrnn.hpp"
#include "ink/train/adam.hpp"
#include "json.hpp"

namespace ink {

struct TrainConfig {
  double lr0 = 1e-3;
  double decay_rate = 0.96;
  std::uint64_t decay_interval = 1000;
  std::size_t epochs = 30;
  std::size_t batch_size = 16;
  /// Linear KL warm-up length in steps; 0 keeps the weight at 1.
  std::uint64_t kl_warmup = 0;
  /// Global gradient-norm bound; <= 0 disables clipping.
  double clip_norm = 5.0;
  /// Write a checkpoint every this many epochs; 0 only at the end.
  std::size_t checkpoint_every = 0;
  /// Stop after this many optimizer steps in total; 0 means no limit.
  std::uint64_t max_steps = 0;
  std::uint64_t seed = 0;

  void validate() const;
  nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& j);
};

/// lr0 * decay_rate ^ floor(step / decay_interval)
double lr_schedule(std::uint64_t step, const TrainConfig& config);
double kl_weight(std::uint64_t step, const TrainConfig& config);

/// Batches of sequence indices for one epoch.
std::vector<std::vector<std::size_t>> epoch_batches(std::span<const EncodedSequence> data,
                                                    std::size_t batch_size, std::uint64_t seed,
                                                    std::size_t epoch);

/// Position of the next batch to run.
struct TrainProgress {
  std::uint64_t step = 0;
  std::size_t epoch = 0;
  std::size_t batch = 0;

  nlohmann::json to_json() const;
  static TrainProgress from_json(const nlohmann::json& j);
};

struct StepRecord {
  std::uint64_t step = 0;
  double lr = 0;
  LossBreakdown loss;
  double wall_ms = 0;
  bool clipped = false;
};

/// One JSON object per line; "clipped" appears only when clipping fired.
std::string metrics_line(const StepRecord& record);

struct StepOutcome {
  LossBreakdown loss;
  Gradients grads;
};

using StepFn = std::function<StepOutcome(std::span<const EncodedSequence> batch,
                                         std::uint64_t seed, double kl_weight)>;

struct TrainHooks {
  std::function<void(const StepRecord&)> on_step;
  /// Called after every checkpoint_every epochs and once at the end.
  std::function<void(const TrainProgress&)> on_checkpoint;
  /// Called with the pre-step state when a step fails numerically.
  std::function<void(const TrainProgress&)> on_failure;
};

/// Runs the loop from `progress` until the epoch budget or max_steps is
/// exhausted. NumericError from a step is rethrown after on_failure.
void run_training(ParamStore& params, AdamState& adam, TrainProgress& progress,
                  std::span<const EncodedSequence> data, const TrainConfig& config,
                  const StepFn& step, const TrainHooks& hooks);

// ---------------------------------------------------------------------------
// Model-level drivers with checkpoint and metrics files.

struct TrainOutputs {
  std::string checkpoint_path;  // empty: no checkpoint files
  std::string metrics_path;     // empty: no metrics file
};

struct TrainResult {
  std::vector<StepRecord> records;
  TrainProgress progress;
};

Checkpoint make_checkpoint(const CvrnnModel& model, const Alphabet& alphabet,
                           const NormStats& stats, const AdamState* adam = nullptr,
                           const TrainProgress* progress = nullptr,
                           const TrainConfig* config = nullptr);
Checkpoint make_checkpoint(const ClassifierModel& model, const Alphabet& alphabet,
                           const NormStats& stats, const AdamState* adam = nullptr,
                           const TrainProgress* progress = nullptr,
                           const TrainConfig* config = nullptr);

/// Throws DataError when the checkpoint holds a different model kind.
CvrnnModel cvrnn_from_checkpoint(const Checkpoint& ckpt);
ClassifierModel classifier_from_checkpoint(const Checkpoint& ckpt);

/// Trains in place. With `resume`, optimizer state and progress continue from
/// the checkpoint (whose parameters must already be loaded into `model`) and
/// existing metrics lines are kept.
TrainResult train_cvrnn(CvrnnModel& model, std::span<const EncodedSequence> data,
                        const Alphabet& alphabet, const NormStats& stats,
                        const TrainConfig& config, const TrainOutputs& outputs,
                        const Checkpoint* resume = nullptr);
TrainResult train_classifier(ClassifierModel& model, std::span<const EncodedSequence> data,
                             const Alphabet& alphabet, const NormStats& stats,
                             const TrainConfig& config, const TrainOutputs& outputs,
                             const Checkpoint* resume = nullptr);

}  // namespace ink
