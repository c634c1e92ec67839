// neural/layers.h

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

#ifndef DYSAUG_NEURAL_LAYERS_H_
#define DYSAUG_NEURAL_LAYERS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/neural/tensor.h"

namespace dysaug {

// Elementwise activations.  Backward functions take the forward input (relu)
// or output (sigmoid) and the upstream gradient.
double Relu(double x);
double Sigmoid(double x);  // branch form, no overflow for large |x|

std::vector<double> ReluForward(std::span<const double> x);
std::vector<double> ReluBackward(std::span<const double> x,
                                 std::span<const double> upstream);
std::vector<double> SigmoidForward(std::span<const double> x);
std::vector<double> SigmoidBackward(std::span<const double> y,
                                    std::span<const double> upstream);

Tensor4 ReluForward(const Tensor4 &x);
Tensor4 ReluBackward(const Tensor4 &x, const Tensor4 &upstream);

// Affine map y = W x + b applied to each row of a (batch x in) matrix.
struct LinearLayer {
  std::size_t in_features = 0, out_features = 0;
  Parameter weight;  // out x in
  Parameter bias;    // out

  static LinearLayer Create(const std::string &name, std::size_t in_features,
                            std::size_t out_features);
  void InitGaussian(RandomStream *rng, double stddev);
};

struct LinearGrads {
  std::vector<double> grad_x;  // batch x in
  std::vector<double> grad_w;
  std::vector<double> grad_b;
};

// x holds `batch` rows of in_features values.
std::vector<double> LinearForward(std::span<const double> x, std::size_t batch,
                                  const LinearLayer &layer);
LinearGrads LinearBackward(std::span<const double> x, std::size_t batch,
                           const LinearLayer &layer,
                           std::span<const double> upstream);

}  // namespace dysaug

#endif  // DYSAUG_NEURAL_LAYERS_H_
