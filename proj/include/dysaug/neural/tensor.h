// neural/tensor.h

// Copyright 2026 The dysaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DYSAUG_NEURAL_TENSOR_H_
#define DYSAUG_NEURAL_TENSOR_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dysaug {

// (batch, channels, freq, time).
struct Shape4 {
  std::size_t n = 0, c = 0, h = 0, w = 0;

  std::size_t size() const { return n * c * h * w; }
  bool operator==(const Shape4 &) const = default;
  std::string ToString() const;
};

// Dense row-major 4-D array with an optional gradient of the same shape.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(Shape4 shape, double fill = 0.0)
      : shape_(shape), data_(shape.size(), fill) {}

  const Shape4 &shape() const { return shape_; }
  std::vector<double> &data() { return data_; }
  const std::vector<double> &data() const { return data_; }

  bool has_grad() const { return !grad_.empty(); }
  std::vector<double> &grad() { return grad_; }
  const std::vector<double> &grad() const { return grad_; }
  // Allocates (or clears) the gradient slot.
  void ZeroGrad() { grad_.assign(data_.size(), 0.0); }

  std::size_t Index(std::size_t n, std::size_t c, std::size_t h,
                    std::size_t w) const {
    return ((n * shape_.c + c) * shape_.h + h) * shape_.w + w;
  }
  double &at(std::size_t n, std::size_t c, std::size_t h, std::size_t w) {
    return data_[Index(n, c, h, w)];
  }
  double at(std::size_t n, std::size_t c, std::size_t h, std::size_t w) const {
    return data_[Index(n, c, h, w)];
  }
  double *plane(std::size_t n, std::size_t c) {
    return data_.data() + Index(n, c, 0, 0);
  }
  const double *plane(std::size_t n, std::size_t c) const {
    return data_.data() + Index(n, c, 0, 0);
  }

 private:
  Shape4 shape_;
  std::vector<double> data_;
  std::vector<double> grad_;
};

// Named trainable array.  `grad` is accumulated by backward passes and
// cleared by ZeroGrad().
struct Parameter {
  std::string name;
  std::vector<std::size_t> shape;
  std::vector<double> value;
  std::vector<double> grad;

  Parameter() = default;
  Parameter(std::string n, std::vector<std::size_t> s);
  std::size_t size() const { return value.size(); }
  void ZeroGrad() { grad.assign(value.size(), 0.0); }
};

}  // namespace dysaug

#endif  // DYSAUG_NEURAL_TENSOR_H_
