// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/train/adam.hpp"

#include <cmath>
#include <string>

#include "ink/core/error.hpp"

namespace ink {

AdamState::AdamState(const ParamStore& params) {
  m.reserve(params.size());
  v.reserve(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    m.push_back(Array::zeros_like(params.at(i)));
    v.push_back(Array::zeros_like(params.at(i)));
  }
}

ParamStore AdamState::to_store(const ParamStore& params) const {
  ParamStore out;
  for (std::size_t i = 0; i < m.size(); ++i) out.add("m/" + params.name(i), m[i]);
  for (std::size_t i = 0; i < v.size(); ++i) out.add("v/" + params.name(i), v[i]);
  return out;
}

AdamState AdamState::from_store(const ParamStore& moments, const ParamStore& params,
                                std::uint64_t step) {
  AdamState s;
  s.step = step;
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (const char* prefix : {"m/", "v/"}) {
      const std::string key = prefix + params.name(i);
      if (!moments.contains(key)) throw ShapeError("adam: missing moment '" + key + "'");
      const Array& a = moments.at(key);
      if (!(a.shape() == params.at(i).shape())) {
        throw ShapeError("adam: moment '" + key + "' has shape " + a.shape().str());
      }
      (prefix[0] == 'm' ? s.m : s.v).push_back(a);
    }
  }
  return s;
}

void adam_step(ParamStore& params, const Gradients& grads, AdamState& state, double lr,
               const AdamConfig& config) {
  if (grads.size() != params.size() || state.m.size() != params.size() ||
      state.v.size() != params.size()) {
    throw ShapeError("adam: parameter, gradient and moment counts differ");
  }
  state.step += 1;
  const double t = static_cast<double>(state.step);
  const double c1 = 1.0 - std::pow(config.beta1, t);
  const double c2 = 1.0 - std::pow(config.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    Array& p = params.at(i);
    const Array& g = grads[i];
    Array& m = state.m[i];
    Array& v = state.v[i];
    if (!(g.shape() == p.shape()) || !(m.shape() == p.shape()) || !(v.shape() == p.shape())) {
      throw ShapeError("adam: shape mismatch for '" + params.name(i) + "'");
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double gk = g[k];
      const double mk = config.beta1 * m[k] + (1.0 - config.beta1) * gk;
      const double vk = config.beta2 * v[k] + (1.0 - config.beta2) * gk * gk;
      m[k] = static_cast<Real>(mk);
      v[k] = static_cast<Real>(vk);
      p[k] = static_cast<Real>(p[k] - lr * (mk / c1) / (std::sqrt(vk / c2) + config.eps));
    }
  }
}

}  // namespace ink
