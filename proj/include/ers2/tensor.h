// Copyright (c) the ers2 project authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERS2_TENSOR_H_
#define ERS2_TENSOR_H_

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ers2 {

// Dense row-major tensor of doubles. Feature maps are stored (C, H, W),
// token matrices (T, C), conv weights (Co, Ci, Kh, Kw).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    v_.assign(static_cast<size_t>(numel(shape_)), 0.0);
  }
  Tensor(std::initializer_list<int> shape) : Tensor(std::vector<int>(shape)) {}

  static int64_t numel(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int d : shape) n *= d;
    return n;
  }

  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  const std::vector<int>& shape() const { return shape_; }
  int64_t size() const { return static_cast<int64_t>(v_.size()); }
  bool empty() const { return v_.empty(); }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  double& operator[](int64_t i) { return v_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return v_[static_cast<size_t>(i)]; }

  double& at(int i, int j) {
    return v_[static_cast<size_t>(i) * shape_[1] + j];
  }
  double at(int i, int j) const {
    return v_[static_cast<size_t>(i) * shape_[1] + j];
  }
  double& at(int i, int j, int k) {
    return v_[(static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k];
  }
  double at(int i, int j, int k) const {
    return v_[(static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k];
  }
  double& at(int i, int j, int k, int l) {
    return v_[((static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k) *
                  shape_[3] +
              l];
  }
  double at(int i, int j, int k, int l) const {
    return v_[((static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k) *
                  shape_[3] +
              l];
  }

  void set_zero() { std::fill(v_.begin(), v_.end(), 0.0); }
  void fill(double x) { std::fill(v_.begin(), v_.end(), x); }

  // In-place reshape; element count must match.
  Tensor& reshape(std::vector<int> shape) {
    assert(numel(shape) == size());
    shape_ = std::move(shape);
    return *this;
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

 private:
  std::vector<int> shape_;
  std::vector<double> v_;
};

// y += x (shapes must match).
void add_inplace(Tensor& y, const Tensor& x);
// y += a * x
void axpy_inplace(Tensor& y, double a, const Tensor& x);
void scale_inplace(Tensor& y, double a);

// Deterministic sum: fixed-order serial accumulation, independent of the
// number of OpenMP threads.
double sum(const Tensor& t);
double mean(const Tensor& t);

}  // namespace ers2

#endif  // ERS2_TENSOR_H_
