// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <array>
#include <initializer_list>
#include <sstream>
#include <string>

#include "dcl/errors.hpp"

namespace dcl {

using Index = Eigen::Index;

template <class Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Up to rank-4 dense shape. Image-like tensors use (N, C, H, W).
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<Index> dims) {
    if (dims.size() > 4) throw ShapeMismatch("rank > 4");
    rank_ = static_cast<int>(dims.size());
    int i = 0;
    for (Index d : dims) dims_[i++] = d;
  }

  int rank() const { return rank_; }
  Index operator[](int i) const { return dims_[i]; }
  Index& operator[](int i) { return dims_[i]; }

  Index numel() const {
    Index n = 1;
    for (int i = 0; i < rank_; ++i) n *= dims_[i];
    return rank_ == 0 ? 0 : n;
  }

  // (N, C, H, W) accessors; only meaningful for rank-4 shapes.
  Index n() const { return dims_[0]; }
  Index c() const { return dims_[1]; }
  Index h() const { return dims_[2]; }
  Index w() const { return dims_[3]; }

  bool operator==(const Shape& o) const {
    if (rank_ != o.rank_) return false;
    for (int i = 0; i < rank_; ++i)
      if (dims_[i] != o.dims_[i]) return false;
    return true;
  }
  bool operator!=(const Shape& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank_; ++i) os << (i ? ", " : "") << dims_[i];
    os << ")";
    return os.str();
  }

 private:
  std::array<Index, 4> dims_{0, 0, 0, 0};
  int rank_ = 0;
};

/// Dense row-major tensor backed by an Eigen array.
template <class Scalar>
class Tensor {
 public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  using MatrixMap = Eigen::Map<RowMatrix<Scalar>>;
  using ConstMatrixMap = Eigen::Map<const RowMatrix<Scalar>>;

  Tensor() = default;
  explicit Tensor(const Shape& shape) : shape_(shape), data_(Array::Zero(shape.numel())) {}
  Tensor(const Shape& shape, Scalar fill) : shape_(shape), data_(Array::Constant(shape.numel(), fill)) {}
  Tensor(const Shape& shape, Array data) : shape_(shape), data_(std::move(data)) {
    if (data_.size() != shape_.numel())
      throw ShapeMismatch("data size " + std::to_string(data_.size()) + " vs shape " + shape_.str());
  }

  static Tensor zeros(const Shape& s) { return Tensor(s); }
  static Tensor constant(const Shape& s, Scalar v) { return Tensor(s, v); }
  static Tensor scalar(Scalar v) { return Tensor(Shape{1}, v); }

  const Shape& shape() const { return shape_; }
  Index size() const { return data_.size(); }
  bool empty() const { return data_.size() == 0; }

  Array& array() { return data_; }
  const Array& array() const { return data_; }
  Scalar* data() { return data_.data(); }
  const Scalar* data() const { return data_.data(); }

  Scalar& operator[](Index i) { return data_[i]; }
  Scalar operator[](Index i) const { return data_[i]; }

  Scalar& operator()(Index i, Index j) { return data_[i * shape_[1] + j]; }
  Scalar operator()(Index i, Index j) const { return data_[i * shape_[1] + j]; }
  Scalar& operator()(Index n, Index c, Index y, Index x) {
    return data_[((n * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
  }
  Scalar operator()(Index n, Index c, Index y, Index x) const {
    return data_[((n * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
  }

  Scalar item() const {
    if (data_.size() != 1) throw ShapeMismatch("item() on tensor of shape " + shape_.str());
    return data_[0];
  }

  /// Whole tensor viewed as a rows x cols matrix.
  MatrixMap matrix(Index rows, Index cols) { return MatrixMap(data_.data(), rows, cols); }
  ConstMatrixMap matrix(Index rows, Index cols) const { return ConstMatrixMap(data_.data(), rows, cols); }

  /// Rank-2 tensor as a matrix.
  MatrixMap matrix() { return matrix(shape_[0], shape_[1]); }
  ConstMatrixMap matrix() const { return matrix(shape_[0], shape_[1]); }

  /// Sample n of an (N, C, H, W) tensor as a C x (H*W) matrix.
  MatrixMap sample(Index n) {
    const Index stride = shape_.c() * shape_.h() * shape_.w();
    return MatrixMap(data_.data() + n * stride, shape_.c(), shape_.h() * shape_.w());
  }
  ConstMatrixMap sample(Index n) const {
    const Index stride = shape_.c() * shape_.h() * shape_.w();
    return ConstMatrixMap(data_.data() + n * stride, shape_.c(), shape_.h() * shape_.w());
  }

  /// Channel plane (n, c) of an (N, C, H, W) tensor as an H x W matrix.
  MatrixMap plane(Index n, Index c) {
    return MatrixMap(data_.data() + (n * shape_.c() + c) * shape_.h() * shape_.w(), shape_.h(), shape_.w());
  }
  ConstMatrixMap plane(Index n, Index c) const {
    return ConstMatrixMap(data_.data() + (n * shape_.c() + c) * shape_.h() * shape_.w(), shape_.h(),
                          shape_.w());
  }

  Tensor reshaped(const Shape& s) const {
    if (s.numel() != shape_.numel()) throw ShapeMismatch("reshape " + shape_.str() + " -> " + s.str());
    return Tensor(s, data_);
  }

  template <class Other>
  Tensor<Other> cast() const {
    return Tensor<Other>(shape_, data_.template cast<Other>());
  }

 private:
  Shape shape_;
  Array data_;
};

inline void require_shape(const Shape& a, const Shape& b, const char* what) {
  if (a != b) throw ShapeMismatch(std::string(what) + ": " + a.str() + " vs " + b.str());
}

}  // namespace dcl
