// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Test-side reference implementations. These are written directly from the
// textbook formulas on plain doubles and never call into the library's math,
// so agreement with the library is evidence rather than tautology.

#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "ink/core/param_store.hpp"
#include "ink/core/rng.hpp"
#include "ink/dist/distributions.hpp"

namespace ink::oracle {

inline double normal_nll(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return 0.5 * z * z + std::log(sigma) + 0.5 * std::log(2 * std::numbers::pi);
}

/// E_q[log q(x) - log p(x)] estimated from n draws of q.
inline double mc_gaussian_kl(const DiagonalGaussian& q, const DiagonalGaussian& p, std::size_t n,
                             Rng& rng) {
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < q.dim(); ++d) {
      const double x = q.mu()[d] + q.sigma()[d] * rng.normal();
      total += normal_nll(x, p.mu()[d], p.sigma()[d]) - normal_nll(x, q.mu()[d], q.sigma()[d]);
    }
  }
  return total / static_cast<double>(n);
}

/// Monte-Carlo KL(q || p) from n draws of q, using the per-draw estimate
/// (r - 1) - log r with r = p(k) / q(k). It is unbiased because E_q[r] = 1,
/// and unlike the plain -log r its spread shrinks with the divergence, so
/// nearly equal pairs are still resolved to well under 1%.
inline double mc_categorical_kl(const Categorical& q, const Categorical& p, std::size_t n,
                                Rng& rng) {
  std::vector<double> cdf(q.size());
  double acc = 0;
  for (std::size_t k = 0; k < q.size(); ++k) cdf[k] = acc += q.probs()[k];
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform() * acc;
    std::size_t k = 0;
    while (k + 1 < cdf.size() && u >= cdf[k]) ++k;
    const double r = p.probs()[k] / q.probs()[k];
    total += (r - 1) - std::log(r);
  }
  return total / static_cast<double>(n);
}

inline std::pair<DiagonalGaussian, DiagonalGaussian> random_gaussian_pair(Rng& rng,
                                                                          std::size_t dim) {
  auto draw = [&] {
    std::vector<Real> mu(dim);
    std::vector<Real> sigma(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      mu[d] = rng.uniform(-1, 1);
      sigma[d] = rng.uniform(0.5, 1.5);
    }
    return DiagonalGaussian(mu, sigma);
  };
  DiagonalGaussian q = draw();
  return {q, draw()};
}

inline Categorical random_categorical(Rng& rng, std::size_t k) {
  std::vector<Real> w(k);
  double total = 0;
  for (auto& v : w) total += v = std::exp(rng.normal());
  for (auto& v : w) v /= total;
  return Categorical(w);
}

inline std::pair<Categorical, Categorical> random_categorical_pair(Rng& rng, std::size_t k) {
  Categorical q = random_categorical(rng, k);
  return {q, random_categorical(rng, k)};
}

inline double sigmoid(double x) { return 1 / (1 + std::exp(-x)); }

struct LstmRef {
  std::vector<double> h;
  std::vector<double> c;
};

/// One LSTM step on row-major weights, gates stacked (i, f, g, o).
inline LstmRef lstm_step(std::span<const Real> wx, std::span<const Real> wh,
                         std::span<const Real> b, const std::vector<double>& x,
                         const LstmRef& prev) {
  const std::size_t hidden = prev.h.size();
  const std::size_t in = x.size();
  std::vector<double> pre(4 * hidden);
  for (std::size_t r = 0; r < 4 * hidden; ++r) {
    double acc = b[r];
    for (std::size_t k = 0; k < in; ++k) acc += wx[r * in + k] * x[k];
    for (std::size_t k = 0; k < hidden; ++k) acc += wh[r * hidden + k] * prev.h[k];
    pre[r] = acc;
  }
  LstmRef next{std::vector<double>(hidden), std::vector<double>(hidden)};
  for (std::size_t j = 0; j < hidden; ++j) {
    const double i = sigmoid(pre[j]);
    const double f = sigmoid(pre[hidden + j]);
    const double g = std::tanh(pre[2 * hidden + j]);
    const double o = sigmoid(pre[3 * hidden + j]);
    next.c[j] = f * prev.c[j] + i * g;
    next.h[j] = o * std::tanh(next.c[j]);
  }
  return next;
}

using Vec = std::vector<double>;

inline Vec concat(std::initializer_list<Vec> parts) {
  Vec out;
  for (const Vec& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Vec dense(const ParamStore& store, const std::string& prefix, const Vec& x) {
  const Array& w = store.at(prefix + "/w");
  const Array& b = store.at(prefix + "/b");
  Vec y(w.rows());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    double acc = b[r];
    for (std::size_t k = 0; k < w.cols(); ++k) acc += w.at(r, k) * x[k];
    y[r] = acc;
  }
  return y;
}

inline Vec mlp(const ParamStore& store, const std::string& prefix, const Vec& x) {
  Vec h = dense(store, prefix + "/hidden", x);
  for (double& v : h) v = std::max(v, 0.0);
  return dense(store, prefix + "/out", h);
}

inline double softplus(double x) { return x > 30 ? x : std::log1p(std::exp(x)); }

inline Vec softmax(const Vec& logits) {
  double top = logits[0];
  for (double v : logits) top = std::max(top, v);
  Vec p(logits.size());
  double total = 0;
  for (std::size_t k = 0; k < p.size(); ++k) total += p[k] = std::exp(logits[k] - top);
  for (double& v : p) v /= total;
  return p;
}

inline LstmRef lstm(const ParamStore& store, const std::string& prefix, const Vec& x,
                    const LstmRef& prev) {
  return lstm_step(store.at(prefix + "/wx").data(), store.at(prefix + "/wh").data(),
                   store.at(prefix + "/b").data(), x, prev);
}

}  // namespace ink::oracle
