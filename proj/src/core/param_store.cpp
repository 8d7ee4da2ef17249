// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/core/param_store.hpp"

#include <cmath>

#include "ink/core/error.hpp"

namespace ink {

std::size_t ParamStore::add(std::string name, Array value) {
  if (index_.contains(name)) {
    throw ContractError("duplicate parameter name '" + name + "'");
  }
  const std::size_t i = values_.size();
  index_.emplace(name, i);
  names_.push_back(std::move(name));
  values_.push_back(std::move(value));
  return i;
}

bool ParamStore::contains(std::string_view name) const {
  return index_.contains(std::string(name));
}

std::size_t ParamStore::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw ContractError("unknown parameter '" + std::string(name) + "'");
  }
  return it->second;
}

std::size_t ParamStore::total_elements() const {
  std::size_t n = 0;
  for (const Array& a : values_) n += a.size();
  return n;
}

Gradients::Gradients(const ParamStore& store) {
  grads_.reserve(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    grads_.push_back(Array::zeros_like(store.at(i)));
  }
}

void Gradients::add(const Gradients& other) {
  if (other.grads_.size() != grads_.size()) {
    throw ShapeError("gradient sets have different parameter counts");
  }
  for (std::size_t i = 0; i < grads_.size(); ++i) {
    if (!(grads_[i].shape() == other.grads_[i].shape())) {
      throw ShapeError("gradient shape mismatch for parameter " + std::to_string(i));
    }
    auto dst = grads_[i].data();
    auto src = other.grads_[i].data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  }
}

void Gradients::scale(Real factor) {
  for (Array& g : grads_) {
    for (Real& v : g.data()) v *= factor;
  }
}

double Gradients::global_norm() const {
  double sq = 0;
  for (const Array& g : grads_) {
    for (Real v : g.data()) sq += static_cast<double>(v) * v;
  }
  return std::sqrt(sq);
}

}  // namespace ink
