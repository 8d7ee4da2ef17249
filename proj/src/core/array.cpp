// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/core/array.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ink/core/error.hpp"

namespace ink {

Shape::Shape(std::initializer_list<std::size_t> dims) {
  if (dims.size() > kMaxRank) {
    throw ShapeError("arrays have rank at most 2");
  }
  std::copy(dims.begin(), dims.end(), dims_.begin());
  rank_ = dims.size();
}

std::size_t Shape::elements() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank_; ++i) n *= dims_[i];
  return n;
}

std::string Shape::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i > 0) os << ',';
    os << dims_[i];
  }
  os << ']';
  return os.str();
}

Array::Array(Shape shape, Real fill) : shape_(shape), data_(shape.elements(), fill) {}

Array::Array(Shape shape, std::vector<Real> data) : shape_(shape), data_(std::move(data)) {
  if (data_.size() != shape_.elements()) {
    throw ShapeError("array data length " + std::to_string(data_.size()) +
                     " does not match shape " + shape_.str());
  }
}

Array Array::vector(std::vector<Real> values) {
  const std::size_t n = values.size();
  return Array(Shape::vector(n), std::move(values));
}

Array Array::matrix(std::size_t rows, std::size_t cols, std::vector<Real> values) {
  return Array(Shape::matrix(rows, cols), std::move(values));
}

std::size_t Array::rows() const {
  return shape_.rank() == 0 ? 1 : shape_[0];
}

std::size_t Array::cols() const {
  return shape_.rank() == 2 ? shape_[1] : 1;
}

Real Array::item() const {
  if (data_.size() != 1) {
    throw ShapeError("item() on array of shape " + shape_.str());
  }
  return data_[0];
}

bool Array::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Real v) { return std::isfinite(v); });
}

void Array::fill(Real v) { std::fill(data_.begin(), data_.end(), v); }

}  // namespace ink
