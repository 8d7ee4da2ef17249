// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Conditional variational recurrent network over pen points.
//
// Per time step t, with x_t the model-space point (du, dv, pen):
//
//   h_t^inp     = lstm_inp(x_t, h_{t-1}^inp)
//   q(z_t)      = N from g_qz(h_t^inp, h_{t-1}^lat)        posterior style
//   q(pi_t)     = softmax g_qpi(h_t^inp, h_{t-1}^lat)      posterior content
//   p(z_t)      = N from g_pz(h_{t-1}^lat)                 prior style
//   p(pi_t)     = softmax g_ppi(h_{t-1}^lat)               prior content
//   phi_t       = mu_k + sigma_k * eps, k = character id   content embedding
//   p(x_t | .)  = g_out(z_t, phi_t, bow_t)                 bivariate Gaussian,
//                                                          pen and eoc Bernoullis
//   h_t^lat     = lstm_lat([h_t^inp, z_t, phi_t], h_{t-1}^lat)
//
// g_out never sees a recurrent state; style and content reach the decoder
// only through z and phi. Every g_* is one ReLU hidden layer of width F.
// Gaussian scales use softplus(raw) + 1e-4, the correlation (1 - 1e-5) tanh.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ink/core/graph.hpp"
#include "ink/core/param_store.hpp"
#include "ink/core/rng.hpp"
#include "ink/data/alphabet.hpp"
#include "ink/data/ink.hpp"
#include "ink/dist/distributions.hpp"
#include "ink/nn/dense.hpp"
#include "ink/nn/lstm.hpp"
#include "json.hpp"

namespace ink {

struct CvrnnConfig {
  std::size_t input_size = 3;
  std::size_t hidden_size = 32;
  std::size_t latent_dim = 8;
  std::size_t gmm_dim = 8;
  std::size_t alphabet_size = 5;
  std::size_t ff_width = 32;

  void validate() const;
  /// Full-size network: 512-unit cells and layers, 32-dim latents.
  static CvrnnConfig full_scale(std::size_t alphabet_size);

  nlohmann::json to_json() const;
  static CvrnnConfig from_json(const nlohmann::json& j);
};

class CvrnnModel {
 public:
  /// Random initialisation from `seed`.
  CvrnnModel(const CvrnnConfig& config, std::uint64_t seed);
  /// Wraps existing parameters; throws ShapeError when they do not match.
  CvrnnModel(const CvrnnConfig& config, ParamStore params);
  /// Every parameter zero (including the mixture tables).
  static CvrnnModel zeros(const CvrnnConfig& config);

  const CvrnnConfig& config() const { return config_; }
  ParamStore& params() { return params_; }
  const ParamStore& params() const { return params_; }
  GmmLatentSpace gmm() const;

  LstmSpec input_cell() const;
  LstmSpec latent_cell() const;
  MlpSpec posterior_z() const;
  MlpSpec posterior_pi() const;
  MlpSpec prior_z() const;
  MlpSpec prior_pi() const;
  MlpSpec output() const;

  static constexpr const char* kGmmMu = "gmm/mu";
  static constexpr const char* kGmmLogSigma = "gmm/log_sigma";
  /// Decoder output layout: mu(2), raw sigma(2), raw rho, pen logit, eoc logit.
  static constexpr std::size_t kOutputWidth = 7;

 private:
  void check_shapes() const;

  CvrnnConfig config_;
  ParamStore params_;
};

// ---------------------------------------------------------------------------
// Graph-level building blocks.

struct CvrnnNet {
  const CvrnnConfig* config = nullptr;
  LstmWeights input_cell;
  LstmWeights latent_cell;
  MlpWeights q_z;
  MlpWeights q_pi;
  MlpWeights p_z;
  MlpWeights p_pi;
  MlpWeights out;
  Var gmm_mu;
  Var gmm_log_sigma;

  static CvrnnNet bind(Graph& g, const CvrnnModel& model);
};

struct CvrnnStateVars {
  LstmState input;
  LstmState latent;
};

struct PosteriorVars {
  LstmState input;  // h_t^inp after consuming x_t
  GaussianVars z;
  Var pi;
};

struct PriorVars {
  GaussianVars z;
  Var pi;
};

struct StepOutputVars {
  Var mu;     // 2
  Var sigma;  // 2
  Var rho;    // 1
  Var pen;    // probability
  Var eoc;    // probability
};

CvrnnStateVars zero_state(Graph& g, const CvrnnConfig& config);
PosteriorVars posterior_step(const CvrnnNet& net, Var x, const CvrnnStateVars& state);
PriorVars prior_step(const CvrnnNet& net, const CvrnnStateVars& state);
StepOutputVars decode_step(const CvrnnNet& net, Var z, Var phi, bool bow);
CvrnnStateVars latent_update(const CvrnnNet& net, const LstmState& input_t, Var z, Var phi,
                             const CvrnnStateVars& previous);

// ---------------------------------------------------------------------------
// Value-level interface.

struct CvrnnState {
  Array input_h;
  Array input_c;
  Array latent_h;
  Array latent_c;

  static CvrnnState zeros(const CvrnnConfig& config);
  CvrnnStateVars bind(Graph& g) const;
  static CvrnnState read(const CvrnnStateVars& vars);

  friend bool operator==(const CvrnnState&, const CvrnnState&) = default;
};

struct StepOutput {
  BivariateGaussianParams coords;
  BernoulliParam pen{0.5};
  BernoulliParam eoc{0.5};
};

struct PosteriorOutput {
  CvrnnState state;  // input cell advanced, latent cell unchanged
  DiagonalGaussian z;
  Categorical pi;
};

struct PriorOutput {
  DiagonalGaussian z;
  Categorical pi;
};

PosteriorOutput posterior_step(const CvrnnModel& model, std::array<Real, 3> x,
                               const CvrnnState& state);
PriorOutput prior_step(const CvrnnModel& model, const CvrnnState& state);
StepOutput decode_step(const CvrnnModel& model, std::span<const Real> z, std::span<const Real> phi,
                       bool bow);
/// `state` must already hold h_t^inp; returns it with the latent cell advanced.
CvrnnState latent_update(const CvrnnModel& model, const CvrnnState& state,
                         std::span<const Real> z, std::span<const Real> phi);

// ---------------------------------------------------------------------------
// Training objective.

struct LossBreakdown {
  double recon_nll = 0;
  double kl_z = 0;
  double kl_pi = 0;
  double classification = 0;
  double eoc_nll = 0;
  /// recon + kl_weight * (kl_z + kl_pi) + classification + eoc
  double total = 0;

  friend bool operator==(const LossBreakdown&, const LossBreakdown&) = default;
};

struct TrainStepOptions {
  Real kl_weight = 1;
  /// Blocks gradients into the prior networks.
  bool detach_priors = false;
  /// Reparametrisation noise for batch item b is drawn from Rng(derive(seed, b)).
  std::uint64_t seed = 0;
};

/// Loss terms of one teacher-forced sequence, each summed over time.
struct SequenceLoss {
  Var recon;
  Var kl_z;
  Var kl_pi;
  Var classification;
  Var eoc;
  Var total;
  std::vector<Var> step_totals;
  std::vector<Var> step_kl_z;
  std::vector<Var> step_kl_pi;
  CvrnnStateVars final_state;
};

SequenceLoss sequence_loss(Graph& g, const CvrnnNet& net, const EncodedSequence& seq, Rng& rng,
                           const TrainStepOptions& options);

struct TrainStepResult {
  LossBreakdown loss;  // averaged over the batch
  Gradients grads;     // of the batch-mean total
  double min_step_kl_z = 0;
  double min_step_kl_pi = 0;
};

/// Sums each sequence's loss over its own length and averages over the batch.
TrainStepResult training_step(const CvrnnModel& model, std::span<const EncodedSequence> batch,
                              const TrainStepOptions& options);

// ---------------------------------------------------------------------------
// Synthesis and inference.

struct SamplingConfig {
  Real eoc_threshold = 0.5;
  std::size_t max_strokes_per_char = 50;
  bool greedy = false;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SampleResult {
  EncodedSequence strokes;   // model space
  std::vector<Real> eoc_trace;
  /// True when some character was cut off by max_strokes_per_char.
  bool partial = false;
};

/// Writes `text` character by character. Spaces separate words and produce
/// no points. A character ends when the predicted eoc probability exceeds
/// the threshold or its stroke budget runs out.
SampleResult sample_text(const CvrnnModel& model, const Alphabet& alphabet, std::string_view text,
                         const CvrnnState& initial, const SamplingConfig& config);

/// Teacher-forced pass over a labelled sequence; returns the final state.
CvrnnState infer_style(const CvrnnModel& model, const EncodedSequence& seq, std::uint64_t seed);

/// Initial sampler state carrying the latent state of a reference sample.
CvrnnState style_state(const CvrnnModel& model, const EncodedSequence& reference,
                       std::uint64_t seed);

/// Re-generates every point of `seq` from its own posterior. Labels
/// (y, bow) drive the decoder; the result has the same length and labels.
EncodedSequence reconstruct(const CvrnnModel& model, const EncodedSequence& seq, bool greedy,
                            std::uint64_t seed);

}  // namespace ink
