// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ink/core/array.hpp"

namespace ink {

/// Ordered registry of named trainable arrays. Names are unique.
class ParamStore {
 public:
  std::size_t add(std::string name, Array value);

  bool contains(std::string_view name) const;
  std::size_t index(std::string_view name) const;

  std::size_t size() const { return values_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  Array& at(std::size_t i) { return values_[i]; }
  const Array& at(std::size_t i) const { return values_[i]; }
  Array& at(std::string_view name) { return values_[index(name)]; }
  const Array& at(std::string_view name) const { return values_[index(name)]; }

  std::size_t total_elements() const;

 private:
  std::vector<std::string> names_;
  std::vector<Array> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One gradient array per parameter, aligned with ParamStore order.
class Gradients {
 public:
  Gradients() = default;
  explicit Gradients(const ParamStore& store);

  std::size_t size() const { return grads_.size(); }
  Array& operator[](std::size_t i) { return grads_[i]; }
  const Array& operator[](std::size_t i) const { return grads_[i]; }

  void add(const Gradients& other);
  void scale(Real factor);
  double global_norm() const;

 private:
  std::vector<Array> grads_;
};

}  // namespace ink
