// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/verify/gradcheck_suite.hpp"

#include <functional>

#include "ink/core/grad_check.hpp"
#include "ink/core/graph.hpp"
#include "ink/core/rng.hpp"
#include "ink/dist/distributions.hpp"
#include "ink/model/classifier.hpp"
#include "ink/model/cvrnn.hpp"
#include "ink/nn/dense.hpp"
#include "ink/nn/lstm.hpp"

namespace ink {

namespace {

Array uniform(Shape shape, Rng& rng, double lo, double hi) {
  Array a(shape);
  for (Real& v : a.data()) v = static_cast<Real>(rng.uniform(lo, hi));
  return a;
}

// Magnitudes in [lo, hi] with random sign: keeps values off a kink at zero.
Array off_zero(Shape shape, Rng& rng, double lo, double hi) {
  Array a(shape);
  for (Real& v : a.data()) {
    const double m = rng.uniform(lo, hi);
    v = static_cast<Real>(rng.uniform() < 0.5 ? -m : m);
  }
  return a;
}

class Suite {
 public:
  Suite(double tolerance, std::uint64_t seed) : tolerance_(tolerance), rng_(seed) {}

  Rng& rng() { return rng_; }

  // Checks sum(w * f(params)) for a fixed random w of f's shape.
  void project(const std::string& name, ParamStore store,
               const std::function<Var(Graph&)>& f) {
    Graph g(store);
    Var out = f(g);
    Var w = g.constant(uniform(out.value().shape(), rng_, -1, 1));
    record(name, g, sum(out * w), store);
  }

  void scalar(const std::string& name, ParamStore& store, const std::function<Var(Graph&)>& f) {
    Graph g(store);
    record(name, g, f(g), store);
  }

  std::vector<SuiteResult> take() { return std::move(results_); }

 private:
  void record(const std::string& name, Graph& g, Var loss, ParamStore& store) {
    GradCheckOptions o;
    o.tolerance = tolerance_;
    GradCheckReport r = grad_check(g, loss, store, o);
    results_.push_back({name, r.max_rel_error, r.entries.size(), r.passed});
  }

  double tolerance_;
  Rng rng_;
  std::vector<SuiteResult> results_;
};

// Fresh models have zero biases, which puts every relu unit fed by a zero
// input exactly on its kink. Random biases move them off it.
void randomize_biases(ParamStore& store, Rng& rng) {
  for (std::size_t i = 0; i < store.size(); ++i) {
    const std::string& name = store.name(i);
    if (name.size() >= 2 && name.compare(name.size() - 2, 2, "/b") == 0) {
      for (Real& v : store.at(i).data()) v = static_cast<Real>(rng.uniform(-0.5, 0.5));
    }
  }
}

ParamStore store_of(std::initializer_list<std::pair<const char*, Array>> items) {
  ParamStore s;
  for (const auto& [name, value] : items) s.add(name, value);
  return s;
}

EncodedSequence random_sequence(Rng& rng, std::size_t steps, std::size_t alphabet) {
  EncodedSequence seq;
  std::size_t k = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    const int pen = rng.uniform() < 0.3 ? 1 : 0;
    if (t == 0) {
      seq.deltas.push_back({0, 0, static_cast<Real>(pen)});
    } else {
      seq.deltas.push_back(
          {static_cast<Real>(rng.normal()), static_cast<Real>(rng.normal()), static_cast<Real>(pen)});
    }
    seq.y.push_back(static_cast<int>(k));
    const bool last = t + 1 == steps;
    const int eoc = last || rng.uniform() < 0.5 ? 1 : 0;
    seq.eoc.push_back(eoc);
    seq.bow.push_back(t == 0 || (t % 3 == 0) ? 1 : 0);
    if (eoc) k = (k + 1) % alphabet;
  }
  return seq;
}

}  // namespace

std::vector<SuiteResult> gradcheck_suite(double tolerance, std::uint64_t seed,
                                         const SuiteModelSize& size) {
  Suite s(tolerance, seed);
  Rng& rng = s.rng();
  const Shape m34 = Shape::matrix(3, 4);
  auto ab = [&](double lo, double hi) {
    return store_of({{"a", uniform(m34, rng, -1, 1)}, {"b", uniform(m34, rng, lo, hi)}});
  };

  s.project("add", ab(-1, 1), [](Graph& g) { return g.param("a") + g.param("b"); });
  s.project("add_broadcast",
            store_of({{"a", uniform(m34, rng, -1, 1)}, {"b", uniform(Shape::scalar(), rng, -1, 1)}}),
            [](Graph& g) { return g.param("a") + g.param("b"); });
  s.project("sub", ab(-1, 1), [](Graph& g) { return g.param("a") - g.param("b"); });
  s.project("mul", ab(-1, 1), [](Graph& g) { return g.param("a") * g.param("b"); });
  s.project("div", ab(0.5, 2), [](Graph& g) { return g.param("a") / g.param("b"); });
  s.project("neg", ab(-1, 1), [](Graph& g) { return -g.param("a"); });
  s.project("add_scalar", ab(-1, 1), [](Graph& g) { return add_scalar(g.param("a"), 0.7); });
  s.project("mul_scalar", ab(-1, 1), [](Graph& g) { return mul_scalar(g.param("a"), -1.3); });
  s.project("matmul_vector",
            store_of({{"a", uniform(m34, rng, -1, 1)},
                      {"b", uniform(Shape::vector(4), rng, -1, 1)}}),
            [](Graph& g) { return matmul(g.param("a"), g.param("b")); });
  s.project("matmul_matrix",
            store_of({{"a", uniform(m34, rng, -1, 1)},
                      {"b", uniform(Shape::matrix(4, 2), rng, -1, 1)}}),
            [](Graph& g) { return matmul(g.param("a"), g.param("b")); });
  s.project("tanh", ab(-1, 1), [](Graph& g) { return tanh(g.param("a")); });
  s.project("sigmoid", ab(-1, 1), [](Graph& g) { return sigmoid(g.param("a")); });
  s.project("exp", ab(-1, 1), [](Graph& g) { return exp(g.param("a")); });
  s.project("log", ab(0.5, 2), [](Graph& g) { return log(g.param("b")); });
  s.project("softplus", ab(-1, 1), [](Graph& g) { return softplus(g.param("a")); });
  s.project("relu", store_of({{"a", off_zero(m34, rng, 0.1, 1)}}),
            [](Graph& g) { return relu(g.param("a")); });
  s.project("square", ab(-1, 1), [](Graph& g) { return square(g.param("a")); });
  s.project("softmax", store_of({{"a", uniform(Shape::vector(5), rng, -2, 2)}}),
            [](Graph& g) { return softmax(g.param("a")); });
  s.project("concat",
            store_of({{"a", uniform(Shape::vector(3), rng, -1, 1)},
                      {"b", uniform(Shape::vector(2), rng, -1, 1)}}),
            [](Graph& g) { return concat({g.param("a"), g.param("b"), g.param("a")}); });
  s.project("slice", store_of({{"a", uniform(Shape::vector(6), rng, -1, 1)}}),
            [](Graph& g) { return slice(g.param("a"), 2, 3); });
  s.project("pick", store_of({{"a", uniform(Shape::vector(6), rng, -1, 1)}}),
            [](Graph& g) { return pick(g.param("a"), 4); });
  s.project("row", ab(-1, 1), [](Graph& g) { return row(g.param("a"), 1); });
  s.project("sum", ab(-1, 1), [](Graph& g) { return sum(square(g.param("a"))); });
  s.project("mean", ab(-1, 1), [](Graph& g) { return mean(square(g.param("a"))); });
  {
    // Values stay at least 0.1 away from the clamp bounds +-0.5.
    Array a(m34);
    for (Real& v : a.data()) {
      const double m = rng.uniform() < 0.5 ? rng.uniform(0.0, 0.4) : rng.uniform(0.6, 1.0);
      v = static_cast<Real>(rng.uniform() < 0.5 ? -m : m);
    }
    s.project("clamp", store_of({{"a", a}}),
              [](Graph& g) { return clamp(g.param("a"), -0.5, 0.5); });
  }

  // Distribution terms.
  const Shape v4 = Shape::vector(4);
  auto gauss_store = [&] {
    return store_of({{"qm", uniform(v4, rng, -1, 1)}, {"qs", uniform(v4, rng, -1, 1)},
                     {"pm", uniform(v4, rng, -1, 1)}, {"ps", uniform(v4, rng, -1, 1)}});
  };
  s.project("gaussian_kl", gauss_store(), [](Graph& g) {
    return gaussian_kl({g.param("qm"), positive_scale(g.param("qs"))},
                       {g.param("pm"), positive_scale(g.param("ps"))});
  });
  s.project("categorical_kl",
            store_of({{"q", uniform(Shape::vector(5), rng, -2, 2)},
                      {"p", uniform(Shape::vector(5), rng, -2, 2)}}),
            [](Graph& g) { return categorical_kl(softmax(g.param("q")), softmax(g.param("p"))); });
  s.project("gaussian_sample", gauss_store(), [&](Graph& g) {
    Var eps = g.constant(uniform(Shape::vector(4), rng, -2, 2));
    return gaussian_sample({g.param("qm"), positive_scale(g.param("qs"))}, eps);
  });
  s.project("gmm_sample",
            store_of({{"mu", uniform(Shape::matrix(3, 4), rng, -1, 1)},
                      {"ls", uniform(Shape::matrix(3, 4), rng, -0.5, 0.5)}}),
            [&](Graph& g) {
              Var eps = g.constant(uniform(Shape::vector(4), rng, -2, 2));
              return gmm_sample(g.param("mu"), g.param("ls"), 1, eps);
            });
  s.project("bivariate_nll",
            store_of({{"mu", uniform(Shape::vector(2), rng, -1, 1)},
                      {"sigma", uniform(Shape::vector(2), rng, -1, 1)},
                      {"rho", uniform(Shape::vector(1), rng, -1, 1)}}),
            [&](Graph& g) {
              Var target = g.constant(uniform(Shape::vector(2), rng, -1, 1));
              return bivariate_nll(g.param("mu"), positive_scale(g.param("sigma")),
                                   bounded_correlation(g.param("rho")), target);
            });
  s.project("bernoulli_nll", store_of({{"a", uniform(Shape::vector(1), rng, -2, 2)}}),
            [](Graph& g) {
              Var p = sigmoid(g.param("a"));
              return bernoulli_nll(p, 1) + bernoulli_nll(p, 0);
            });
  s.project("cross_entropy", store_of({{"a", uniform(Shape::vector(5), rng, -2, 2)}}),
            [](Graph& g) { return cross_entropy(softmax(g.param("a")), 2); });

  // Layers.
  {
    ParamStore store;
    MlpSpec spec{"mlp", 4, 6, 3};
    spec.init(store, rng);
    // Bias the hidden layer away from zero so no unit sits on the kink.
    for (Real& v : store.at("mlp/hidden/b").data()) v = static_cast<Real>(rng.uniform(0.2, 0.5));
    Array x = uniform(Shape::vector(4), rng, -1, 1);
    s.project("mlp", std::move(store), [&](Graph& g) { return mlp(spec.bind(g), g.constant(x)); });
  }
  {
    ParamStore store;
    LstmSpec spec{"cell", 3, 5};
    spec.init(store, rng);
    std::vector<Array> xs;
    for (int t = 0; t < 3; ++t) xs.push_back(uniform(Shape::vector(3), rng, -1, 1));
    s.project("lstm_unroll", std::move(store), [&](Graph& g) {
      LstmWeights w = spec.bind(g);
      LstmState st = zero_lstm_state(g, 5);
      for (const Array& x : xs) st = lstm_step(w, g.constant(x), st);
      return concat({st.h, st.c});
    });
  }

  // Full objectives.
  {
    CvrnnConfig cfg;
    cfg.hidden_size = size.hidden;
    cfg.latent_dim = size.latent;
    cfg.gmm_dim = size.latent;
    cfg.alphabet_size = size.alphabet;
    cfg.ff_width = size.hidden;
    CvrnnModel model(cfg, Rng::derive(seed, 11));
    randomize_biases(model.params(), rng);
    EncodedSequence seq = random_sequence(rng, size.steps, size.alphabet);
    s.scalar("cvrnn_training_loss", model.params(), [&](Graph& g) {
      CvrnnNet net = CvrnnNet::bind(g, model);
      Rng noise(Rng::derive(seed, 12));
      return sequence_loss(g, net, seq, noise, {}).total;
    });
  }
  {
    ClassifierConfig cfg;
    cfg.hidden_size = 4;
    cfg.layers = 2;
    cfg.projection_size = 4;
    cfg.alphabet_size = 3;
    ClassifierModel model(cfg, Rng::derive(seed, 13));
    randomize_biases(model.params(), rng);
    EncodedSequence seq = random_sequence(rng, 5, 3);
    s.scalar("classifier_loss", model.params(),
             [&](Graph& g) { return classifier_loss(g, model, seq); });
  }
  return s.take();
}

}  // namespace ink
