// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Dense row-major arrays of rank 0, 1 or 2.

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ink {

#if defined(INK_SINGLE_PRECISION)
using Real = float;
#else
using Real = double;
#endif

/// Dimension list of an Array. Rank 0 is a scalar.
class Shape {
 public:
  static constexpr std::size_t kMaxRank = 2;

  Shape() = default;
  Shape(std::initializer_list<std::size_t> dims);

  static Shape scalar() { return Shape(); }
  static Shape vector(std::size_t n) { return Shape{n}; }
  static Shape matrix(std::size_t rows, std::size_t cols) { return Shape{rows, cols}; }

  std::size_t rank() const { return rank_; }
  std::size_t operator[](std::size_t i) const { return dims_[i]; }
  std::size_t elements() const;
  std::vector<std::size_t> dims() const { return {dims_.begin(), dims_.begin() + rank_}; }
  std::string str() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.rank_ == b.rank_ && a.dims_ == b.dims_;
  }

 private:
  std::array<std::size_t, kMaxRank> dims_{0, 0};
  std::size_t rank_ = 0;
};

class Array {
 public:
  /// An empty vector (shape [0]).
  Array() : shape_{0} {}
  explicit Array(Shape shape, Real fill = 0);
  Array(Shape shape, std::vector<Real> data);

  static Array scalar(Real v) { return Array(Shape::scalar(), std::vector<Real>{v}); }
  static Array vector(std::vector<Real> values);
  static Array matrix(std::size_t rows, std::size_t cols, std::vector<Real> values);
  static Array zeros_like(const Array& other) { return Array(other.shape()); }

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return data_.size(); }
  std::size_t rank() const { return shape_.rank(); }
  bool empty() const { return data_.empty(); }

  /// Rows of a matrix, length of a vector, 1 for a scalar.
  std::size_t rows() const;
  /// Columns of a matrix, 1 otherwise.
  std::size_t cols() const;

  std::span<Real> data() { return data_; }
  std::span<const Real> data() const { return data_; }
  std::vector<Real>& storage() { return data_; }
  const std::vector<Real>& storage() const { return data_; }

  Real& operator[](std::size_t i) { return data_[i]; }
  Real operator[](std::size_t i) const { return data_[i]; }
  Real& at(std::size_t r, std::size_t c) { return data_[r * shape_[1] + c]; }
  Real at(std::size_t r, std::size_t c) const { return data_[r * shape_[1] + c]; }
  /// Value of a single-element array.
  Real item() const;

  bool all_finite() const;
  void fill(Real v);

  friend bool operator==(const Array& a, const Array& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  Shape shape_;
  std::vector<Real> data_;
};

}  // namespace ink
