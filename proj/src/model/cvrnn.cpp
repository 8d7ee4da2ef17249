// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/model/cvrnn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ink/core/error.hpp"
#include "ink/core/parallel.hpp"

namespace ink {

namespace {

Var constant_vector(Graph& g, std::span<const Real> v) {
  return g.constant(Array::vector(std::vector<Real>(v.begin(), v.end())));
}

Var noise(Graph& g, Rng& rng, std::size_t n) {
  std::vector<Real> eps(n);
  for (Real& e : eps) e = static_cast<Real>(rng.normal());
  return g.constant(Array::vector(std::move(eps)));
}

std::vector<Real> values_of(Var v) { return v.value().storage(); }

// Splits a 2D-wide head into mean and floored scale.
GaussianVars gaussian_head(Var out, std::size_t dim) {
  return {slice(out, 0, dim), positive_scale(slice(out, dim, dim))};
}

DiagonalGaussian to_gaussian(const GaussianVars& g) {
  return DiagonalGaussian(values_of(g.mu), values_of(g.sigma));
}

}  // namespace

void CvrnnConfig::validate() const {
  if (input_size != 3) throw ContractError("cvrnn: input size must be 3");
  if (hidden_size < 1 || latent_dim < 1 || gmm_dim < 1 || alphabet_size < 1 || ff_width < 1) {
    throw ContractError("cvrnn: every dimension must be at least 1");
  }
}

CvrnnConfig CvrnnConfig::full_scale(std::size_t alphabet_size) {
  CvrnnConfig c;
  c.hidden_size = 512;
  c.latent_dim = 32;
  c.gmm_dim = 32;
  c.alphabet_size = alphabet_size;
  c.ff_width = 512;
  return c;
}

nlohmann::json CvrnnConfig::to_json() const {
  return {{"input_size", input_size}, {"hidden_size", hidden_size},
          {"latent_dim", latent_dim}, {"gmm_dim", gmm_dim},
          {"alphabet_size", alphabet_size}, {"ff_width", ff_width},
          {"activation", "relu"}};
}

CvrnnConfig CvrnnConfig::from_json(const nlohmann::json& j) {
  CvrnnConfig c;
  try {
    c.input_size = j.at("input_size").get<std::size_t>();
    c.hidden_size = j.at("hidden_size").get<std::size_t>();
    c.latent_dim = j.at("latent_dim").get<std::size_t>();
    c.gmm_dim = j.at("gmm_dim").get<std::size_t>();
    c.alphabet_size = j.at("alphabet_size").get<std::size_t>();
    c.ff_width = j.at("ff_width").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("cvrnn config: ") + e.what());
  }
  c.validate();
  return c;
}

CvrnnModel::CvrnnModel(const CvrnnConfig& config, std::uint64_t seed) : config_(config) {
  config_.validate();
  Rng rng(seed);
  input_cell().init(params_, rng);
  latent_cell().init(params_, rng);
  posterior_z().init(params_, rng);
  posterior_pi().init(params_, rng);
  prior_z().init(params_, rng);
  prior_pi().init(params_, rng);
  output().init(params_, rng);
  GmmLatentSpace gmm = GmmLatentSpace::initial(config_.alphabet_size, config_.gmm_dim, rng);
  params_.add(kGmmMu, gmm.mu());
  params_.add(kGmmLogSigma, gmm.log_sigma());
}

CvrnnModel::CvrnnModel(const CvrnnConfig& config, ParamStore params)
    : config_(config), params_(std::move(params)) {
  config_.validate();
  check_shapes();
}

CvrnnModel CvrnnModel::zeros(const CvrnnConfig& config) {
  CvrnnModel m(config, 0);
  for (std::size_t i = 0; i < m.params_.size(); ++i) m.params_.at(i).fill(0);
  return m;
}

void CvrnnModel::check_shapes() const {
  // Build a reference layout and compare names and shapes one by one.
  CvrnnModel reference(config_, 0);
  const ParamStore& want = reference.params_;
  if (want.size() != params_.size()) {
    throw ShapeError("cvrnn: expected " + std::to_string(want.size()) + " parameters, got " +
                     std::to_string(params_.size()));
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!params_.contains(want.name(i))) {
      throw ShapeError("cvrnn: missing parameter '" + want.name(i) + "'");
    }
    const Array& got = params_.at(want.name(i));
    if (!(got.shape() == want.at(i).shape())) {
      throw ShapeError("cvrnn: parameter '" + want.name(i) + "' has shape " + got.shape().str() +
                       ", expected " + want.at(i).shape().str());
    }
  }
}

GmmLatentSpace CvrnnModel::gmm() const {
  return GmmLatentSpace(params_.at(kGmmMu), params_.at(kGmmLogSigma));
}

LstmSpec CvrnnModel::input_cell() const {
  return {"input_cell", config_.input_size, config_.hidden_size};
}

LstmSpec CvrnnModel::latent_cell() const {
  return {"latent_cell", config_.hidden_size + config_.latent_dim + config_.gmm_dim,
          config_.hidden_size};
}

MlpSpec CvrnnModel::posterior_z() const {
  return {"posterior_z", 2 * config_.hidden_size, config_.ff_width, 2 * config_.latent_dim};
}

MlpSpec CvrnnModel::posterior_pi() const {
  return {"posterior_pi", 2 * config_.hidden_size, config_.ff_width, config_.alphabet_size};
}

MlpSpec CvrnnModel::prior_z() const {
  return {"prior_z", config_.hidden_size, config_.ff_width, 2 * config_.latent_dim};
}

MlpSpec CvrnnModel::prior_pi() const {
  return {"prior_pi", config_.hidden_size, config_.ff_width, config_.alphabet_size};
}

MlpSpec CvrnnModel::output() const {
  return {"output", config_.latent_dim + config_.gmm_dim + 1, config_.ff_width, kOutputWidth};
}

// ---------------------------------------------------------------------------

CvrnnNet CvrnnNet::bind(Graph& g, const CvrnnModel& model) {
  if (g.params() != &model.params()) {
    throw ContractError("cvrnn: graph is not bound to the model's parameters");
  }
  CvrnnNet net;
  net.config = &model.config();
  net.input_cell = model.input_cell().bind(g);
  net.latent_cell = model.latent_cell().bind(g);
  net.q_z = model.posterior_z().bind(g);
  net.q_pi = model.posterior_pi().bind(g);
  net.p_z = model.prior_z().bind(g);
  net.p_pi = model.prior_pi().bind(g);
  net.out = model.output().bind(g);
  net.gmm_mu = g.param(CvrnnModel::kGmmMu);
  net.gmm_log_sigma = g.param(CvrnnModel::kGmmLogSigma);
  return net;
}

CvrnnStateVars zero_state(Graph& g, const CvrnnConfig& config) {
  return {zero_lstm_state(g, config.hidden_size), zero_lstm_state(g, config.hidden_size)};
}

PosteriorVars posterior_step(const CvrnnNet& net, Var x, const CvrnnStateVars& state) {
  LstmState input = lstm_step(net.input_cell, x, state.input);
  Var features = concat({input.h, state.latent.h});
  GaussianVars z = gaussian_head(mlp(net.q_z, features), net.config->latent_dim);
  Var pi = softmax(mlp(net.q_pi, features));
  return {input, z, pi};
}

PriorVars prior_step(const CvrnnNet& net, const CvrnnStateVars& state) {
  GaussianVars z = gaussian_head(mlp(net.p_z, state.latent.h), net.config->latent_dim);
  Var pi = softmax(mlp(net.p_pi, state.latent.h));
  return {z, pi};
}

StepOutputVars decode_step(const CvrnnNet& net, Var z, Var phi, bool bow) {
  if (z.size() != net.config->latent_dim || phi.size() != net.config->gmm_dim) {
    throw ShapeError("decode_step: expected z of " + std::to_string(net.config->latent_dim) +
                     " and phi of " + std::to_string(net.config->gmm_dim) + " elements");
  }
  Graph& g = *z.graph;
  Var in = concat({z, phi, g.constant(Array::vector({bow ? Real(1) : Real(0)}))});
  Var out = mlp(net.out, in);
  StepOutputVars o;
  o.mu = slice(out, 0, 2);
  o.sigma = positive_scale(slice(out, 2, 2));
  o.rho = bounded_correlation(slice(out, 4, 1));
  o.pen = sigmoid(slice(out, 5, 1));
  o.eoc = sigmoid(slice(out, 6, 1));
  return o;
}

CvrnnStateVars latent_update(const CvrnnNet& net, const LstmState& input_t, Var z, Var phi,
                             const CvrnnStateVars& previous) {
  Var in = concat({input_t.h, z, phi});
  return {input_t, lstm_step(net.latent_cell, in, previous.latent)};
}

// ---------------------------------------------------------------------------

CvrnnState CvrnnState::zeros(const CvrnnConfig& config) {
  Array z(Shape::vector(config.hidden_size));
  return {z, z, z, z};
}

CvrnnStateVars CvrnnState::bind(Graph& g) const {
  return {{g.constant(input_h), g.constant(input_c)}, {g.constant(latent_h), g.constant(latent_c)}};
}

CvrnnState CvrnnState::read(const CvrnnStateVars& vars) {
  return {vars.input.h.value(), vars.input.c.value(), vars.latent.h.value(),
          vars.latent.c.value()};
}

namespace {

StepOutput to_step_output(const StepOutputVars& o) {
  StepOutput s;
  s.coords.mu = {o.mu.value()[0], o.mu.value()[1]};
  s.coords.sigma = {o.sigma.value()[0], o.sigma.value()[1]};
  s.coords.rho = o.rho.value()[0];
  s.coords.validate();
  s.pen = BernoulliParam(o.pen.value()[0]);
  s.eoc = BernoulliParam(o.eoc.value()[0]);
  return s;
}

void check_state(const CvrnnModel& model, const CvrnnState& state) {
  const std::size_t h = model.config().hidden_size;
  for (const Array* a : {&state.input_h, &state.input_c, &state.latent_h, &state.latent_c}) {
    if (a->size() != h) throw ShapeError("cvrnn state: expected " + std::to_string(h) + " units");
    if (!a->all_finite()) throw NumericError("cvrnn state: non-finite value");
  }
}

}  // namespace

PosteriorOutput posterior_step(const CvrnnModel& model, std::array<Real, 3> x,
                               const CvrnnState& state) {
  check_state(model, state);
  Graph g(model.params());
  CvrnnNet net = CvrnnNet::bind(g, model);
  CvrnnStateVars sv = state.bind(g);
  PosteriorVars post = posterior_step(net, constant_vector(g, x), sv);
  CvrnnState next = state;
  next.input_h = post.input.h.value();
  next.input_c = post.input.c.value();
  return {next, to_gaussian(post.z), Categorical(values_of(post.pi))};
}

PriorOutput prior_step(const CvrnnModel& model, const CvrnnState& state) {
  check_state(model, state);
  Graph g(model.params());
  CvrnnNet net = CvrnnNet::bind(g, model);
  PriorVars prior = prior_step(net, state.bind(g));
  return {to_gaussian(prior.z), Categorical(values_of(prior.pi))};
}

StepOutput decode_step(const CvrnnModel& model, std::span<const Real> z, std::span<const Real> phi,
                       bool bow) {
  Graph g(model.params());
  CvrnnNet net = CvrnnNet::bind(g, model);
  return to_step_output(decode_step(net, constant_vector(g, z), constant_vector(g, phi), bow));
}

CvrnnState latent_update(const CvrnnModel& model, const CvrnnState& state,
                         std::span<const Real> z, std::span<const Real> phi) {
  check_state(model, state);
  Graph g(model.params());
  CvrnnNet net = CvrnnNet::bind(g, model);
  CvrnnStateVars sv = state.bind(g);
  return CvrnnState::read(
      latent_update(net, sv.input, constant_vector(g, z), constant_vector(g, phi), sv));
}

// ---------------------------------------------------------------------------

namespace {

struct TeacherForced {
  std::vector<Var> recon, kl_z, kl_pi, classification, eoc, totals;
  CvrnnStateVars state;
};

// One pass over `seq` with posterior samples. Noise is drawn per step in a
// fixed order: z (latent_dim), then phi (gmm_dim).
TeacherForced teacher_forced(Graph& g, const CvrnnNet& net, const EncodedSequence& seq, Rng& rng,
                             const TrainStepOptions& options, bool with_loss) {
  const CvrnnConfig& cfg = *net.config;
  TeacherForced tf;
  tf.state = zero_state(g, cfg);
  const char* term = "input";
  try {
    for (std::size_t t = 0; t < seq.length(); ++t) {
      const auto& row = seq.deltas[t];
      const auto k = static_cast<std::size_t>(seq.y[t]);
      term = "posterior";
      PosteriorVars post = posterior_step(net, constant_vector(g, row), tf.state);
      Var eps_z = noise(g, rng, cfg.latent_dim);
      Var eps_phi = noise(g, rng, cfg.gmm_dim);
      Var z = gaussian_sample(post.z, eps_z);
      Var phi = gmm_sample(net.gmm_mu, net.gmm_log_sigma, k, eps_phi);
      if (with_loss) {
        term = "prior";
        PriorVars prior = prior_step(net, tf.state);
        if (options.detach_priors) {
          prior.z.mu = stop_gradient(prior.z.mu);
          prior.z.sigma = stop_gradient(prior.z.sigma);
          prior.pi = stop_gradient(prior.pi);
        }
        term = "decoder";
        StepOutputVars out = decode_step(net, z, phi, seq.bow[t] != 0);
        term = "recon_nll";
        Var recon = bivariate_nll(out.mu, out.sigma, out.rho,
                                  g.constant(Array::vector({row[0], row[1]}))) +
                    bernoulli_nll(out.pen, row[2]);
        term = "eoc_nll";
        Var eoc = bernoulli_nll(out.eoc, static_cast<Real>(seq.eoc[t]));
        term = "classification";
        Var cls = cross_entropy(post.pi, k);
        term = "kl_z";
        Var klz = gaussian_kl(post.z, prior.z);
        term = "kl_pi";
        Var klpi = categorical_kl(post.pi, prior.pi);
        term = "total";
        Var total = recon + cls + eoc;
        if (options.kl_weight != 0) total = total + mul_scalar(klz + klpi, options.kl_weight);
        tf.recon.push_back(recon);
        tf.eoc.push_back(eoc);
        tf.classification.push_back(cls);
        tf.kl_z.push_back(klz);
        tf.kl_pi.push_back(klpi);
        tf.totals.push_back(total);
      }
      term = "latent_update";
      tf.state = latent_update(net, post.input, z, phi, tf.state);
    }
  } catch (const NumericError& e) {
    throw NumericError(std::string("non-finite ") + term + ": " + e.what());
  }
  return tf;
}

Var sum_all(Graph& g, const std::vector<Var>& parts) {
  if (parts.empty()) return g.scalar(0);
  return sum(concat(parts));
}

}  // namespace

SequenceLoss sequence_loss(Graph& g, const CvrnnNet& net, const EncodedSequence& seq, Rng& rng,
                           const TrainStepOptions& options) {
  seq.validate(net.config->alphabet_size);
  TeacherForced tf = teacher_forced(g, net, seq, rng, options, true);
  SequenceLoss loss;
  loss.recon = sum_all(g, tf.recon);
  loss.kl_z = sum_all(g, tf.kl_z);
  loss.kl_pi = sum_all(g, tf.kl_pi);
  loss.classification = sum_all(g, tf.classification);
  loss.eoc = sum_all(g, tf.eoc);
  loss.total = sum_all(g, tf.totals);
  loss.step_totals = std::move(tf.totals);
  loss.step_kl_z = std::move(tf.kl_z);
  loss.step_kl_pi = std::move(tf.kl_pi);
  loss.final_state = tf.state;
  return loss;
}

TrainStepResult training_step(const CvrnnModel& model, std::span<const EncodedSequence> batch,
                              const TrainStepOptions& options) {
  if (batch.empty()) throw ContractError("training_step: empty batch");
  struct Item {
    LossBreakdown loss;
    Gradients grads;
    double min_kl_z = 0;
    double min_kl_pi = 0;
  };
  std::vector<Item> items(batch.size());
  parallel_for(batch.size(), [&](std::size_t b) {
    Graph g(model.params());
    CvrnnNet net = CvrnnNet::bind(g, model);
    Rng rng(Rng::derive(options.seed, b));
    SequenceLoss loss;
    try {
      loss = sequence_loss(g, net, batch[b], rng, options);
    } catch (const NumericError& e) {
      throw NumericError("training_step: sequence " + std::to_string(b) + ": " + e.what());
    }
    Item& item = items[b];
    item.loss.recon_nll = loss.recon.value().item();
    item.loss.kl_z = loss.kl_z.value().item();
    item.loss.kl_pi = loss.kl_pi.value().item();
    item.loss.classification = loss.classification.value().item();
    item.loss.eoc_nll = loss.eoc.value().item();
    item.loss.total = loss.total.value().item();
    item.min_kl_z = std::numeric_limits<double>::infinity();
    item.min_kl_pi = std::numeric_limits<double>::infinity();
    for (Var v : loss.step_kl_z) item.min_kl_z = std::min<double>(item.min_kl_z, v.value().item());
    for (Var v : loss.step_kl_pi) {
      item.min_kl_pi = std::min<double>(item.min_kl_pi, v.value().item());
    }
    item.grads = g.backward(loss.total);
  });

  // Index-ordered reduction keeps the sum independent of the thread count.
  const auto n = static_cast<double>(batch.size());
  TrainStepResult result{{}, Gradients(model.params()), std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity()};
  for (const Item& item : items) {
    result.loss.recon_nll += item.loss.recon_nll / n;
    result.loss.kl_z += item.loss.kl_z / n;
    result.loss.kl_pi += item.loss.kl_pi / n;
    result.loss.classification += item.loss.classification / n;
    result.loss.eoc_nll += item.loss.eoc_nll / n;
    result.loss.total += item.loss.total / n;
    result.min_step_kl_z = std::min(result.min_step_kl_z, item.min_kl_z);
    result.min_step_kl_pi = std::min(result.min_step_kl_pi, item.min_kl_pi);
    result.grads.add(item.grads);
  }
  result.grads.scale(static_cast<Real>(1.0 / n));
  for (std::size_t i = 0; i < result.grads.size(); ++i) {
    if (!result.grads[i].all_finite()) {
      throw NumericError("training_step: non-finite gradient for '" + model.params().name(i) +
                         "'");
    }
  }
  if (!std::isfinite(result.loss.total)) throw NumericError("training_step: non-finite total");
  return result;
}

// ---------------------------------------------------------------------------

void SamplingConfig::validate() const {
  if (!(eoc_threshold > 0 && eoc_threshold < 1)) {
    throw ContractError("sampling: eoc threshold must lie in (0, 1)");
  }
  if (max_strokes_per_char < 1) throw ContractError("sampling: stroke cap must be at least 1");
}

SampleResult sample_text(const CvrnnModel& model, const Alphabet& alphabet, std::string_view text,
                         const CvrnnState& initial, const SamplingConfig& config) {
  config.validate();
  check_state(model, initial);
  if (alphabet.size() != model.config().alphabet_size) {
    throw DataError("sample_text: alphabet has " + std::to_string(alphabet.size()) +
                    " symbols, model expects " + std::to_string(model.config().alphabet_size));
  }
  struct Char {
    std::size_t index;
    bool word_start;
  };
  std::vector<Char> chars;
  bool after_space = true;
  for (char c : text) {
    if (c == ' ') {
      after_space = true;
      continue;
    }
    if (!alphabet.contains(c)) {
      throw DataError(std::string("sample_text: character '") + c + "' is not in the alphabet");
    }
    chars.push_back({alphabet.index(c), after_space});
    after_space = false;
  }

  const CvrnnConfig& cfg = model.config();
  Rng rng(config.seed);
  SampleResult result;
  CvrnnState state = initial;
  std::size_t n = 0;
  std::size_t strokes_in_char = 0;
  while (n < chars.size()) {
    const Char& ch = chars[n];
    const bool bow = ch.word_start && strokes_in_char == 0;

    Graph g(model.params());
    CvrnnNet net = CvrnnNet::bind(g, model);
    CvrnnStateVars sv = state.bind(g);
    PriorVars prior = prior_step(net, sv);
    Var z = config.greedy ? prior.z.mu : gaussian_sample(prior.z, noise(g, rng, cfg.latent_dim));
    Var phi = config.greedy ? row(net.gmm_mu, ch.index)
                            : gmm_sample(net.gmm_mu, net.gmm_log_sigma, ch.index,
                                         noise(g, rng, cfg.gmm_dim));
    StepOutput out = to_step_output(decode_step(net, z, phi, bow));

    std::array<Real, 2> eps{0, 0};
    if (!config.greedy) eps = {static_cast<Real>(rng.normal()), static_cast<Real>(rng.normal())};
    std::array<Real, 2> uv = bivariate_sample(out.coords, eps, config.greedy);
    int pen = 0;
    if (config.greedy) {
      pen = out.pen.p() > 0.5 ? 1 : 0;
    } else {
      pen = rng.uniform() < out.pen.p() ? 1 : 0;
    }
    if (result.strokes.deltas.empty()) uv = {0, 0};

    ++strokes_in_char;
    result.eoc_trace.push_back(out.eoc.p());
    bool advance = out.eoc.p() > config.eoc_threshold;
    if (!advance && strokes_in_char >= config.max_strokes_per_char) {
      advance = true;
      result.partial = true;
    }
    result.strokes.deltas.push_back({uv[0], uv[1], static_cast<Real>(pen)});
    result.strokes.y.push_back(static_cast<int>(ch.index));
    result.strokes.eoc.push_back(advance ? 1 : 0);
    result.strokes.bow.push_back(bow ? 1 : 0);

    // Feed the generated point back so the latent cell sees h_t^inp.
    Var x = constant_vector(g, std::array<Real, 3>{uv[0], uv[1], static_cast<Real>(pen)});
    LstmState input = lstm_step(net.input_cell, x, sv.input);
    state = CvrnnState::read(latent_update(net, input, z, phi, sv));

    if (advance) {
      ++n;
      strokes_in_char = 0;
    }
  }
  return result;
}

CvrnnState infer_style(const CvrnnModel& model, const EncodedSequence& seq, std::uint64_t seed) {
  seq.validate(model.config().alphabet_size);
  Graph g(model.params());
  CvrnnNet net = CvrnnNet::bind(g, model);
  Rng rng(seed);
  TeacherForced tf = teacher_forced(g, net, seq, rng, {}, false);
  return CvrnnState::read(tf.state);
}

CvrnnState style_state(const CvrnnModel& model, const EncodedSequence& reference,
                       std::uint64_t seed) {
  CvrnnState s = infer_style(model, reference, seed);
  s.input_h.fill(0);
  s.input_c.fill(0);
  return s;
}

EncodedSequence reconstruct(const CvrnnModel& model, const EncodedSequence& seq, bool greedy,
                            std::uint64_t seed) {
  const CvrnnConfig& cfg = model.config();
  seq.validate(cfg.alphabet_size);
  Graph g(model.params());
  CvrnnNet net = CvrnnNet::bind(g, model);
  Rng rng(seed);
  EncodedSequence out;
  out.y = seq.y;
  out.eoc = seq.eoc;
  out.bow = seq.bow;
  CvrnnStateVars state = zero_state(g, cfg);
  for (std::size_t t = 0; t < seq.length(); ++t) {
    const auto k = static_cast<std::size_t>(seq.y[t]);
    PosteriorVars post = posterior_step(net, constant_vector(g, seq.deltas[t]), state);
    Var z = greedy ? post.z.mu : gaussian_sample(post.z, noise(g, rng, cfg.latent_dim));
    Var phi = greedy ? row(net.gmm_mu, k)
                     : gmm_sample(net.gmm_mu, net.gmm_log_sigma, k, noise(g, rng, cfg.gmm_dim));
    StepOutput o = to_step_output(decode_step(net, z, phi, seq.bow[t] != 0));
    std::array<Real, 2> eps{0, 0};
    if (!greedy) eps = {static_cast<Real>(rng.normal()), static_cast<Real>(rng.normal())};
    std::array<Real, 2> uv = bivariate_sample(o.coords, eps, greedy);
    int pen = 0;
    if (greedy) {
      pen = o.pen.p() > 0.5 ? 1 : 0;
    } else {
      pen = rng.uniform() < o.pen.p() ? 1 : 0;
    }
    // Row 0 is the origin anchor of every encoded sequence.
    if (t == 0) uv = {0, 0};
    out.deltas.push_back({uv[0], uv[1], static_cast<Real>(pen)});
    state = latent_update(net, post.input, z, phi, state);
  }
  return out;
}

}  // namespace ink
