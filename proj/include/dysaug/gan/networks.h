// gan/networks.h

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

#ifndef DYSAUG_GAN_NETWORKS_H_
#define DYSAUG_GAN_NETWORKS_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/neural/conv2d.h"
#include "dysaug/neural/layers.h"
#include "dysaug/neural/tensor.h"

namespace dysaug {

inline constexpr double kInitStddev = 0.02;

// Four 3x3 stride-1 convolutions with replicate padding, 1 -> 8 -> 8 -> 8 -> 1
// channels, ReLU after the first three.  Shape-preserving for any input of
// at least 1x1, so training on crops and running full utterances at
// inference use the same weights.
class Generator {
 public:
  static constexpr std::size_t kHiddenChannels = 8;

  struct Cache {
    Tensor4 input;
    std::array<Tensor4, 3> pre;   // conv1..conv3 outputs before ReLU
    std::array<Tensor4, 3> post;  // after ReLU
  };

  Generator();
  void Init(RandomStream *rng, double stddev = kInitStddev);

  Tensor4 Forward(const Tensor4 &x, Cache *cache = nullptr) const;
  // Adds parameter gradients into each Parameter::grad and returns dL/dx
  // (empty unless need_input_grad).
  Tensor4 Backward(const Cache &cache, const Tensor4 &grad_out,
                   bool need_input_grad = false);

  std::vector<Parameter *> Parameters();
  std::vector<const Parameter *> Parameters() const;
  void ZeroGrad();

  std::array<Conv2dLayer, 4> layers;
};

// Four 2x2 stride-2 convolutions without padding, 1 -> 8 -> 16 -> 32 -> 64
// channels, each followed by ReLU; flatten; fully connected to one logit;
// sigmoid.  Accepts exactly (freq_bins x crop_frames) inputs.
class Discriminator {
 public:
  static constexpr std::array<std::size_t, 4> kChannels = {8, 16, 32, 64};

  struct Cache {
    Tensor4 input;
    std::array<Tensor4, 4> pre;
    std::array<Tensor4, 4> post;
    std::vector<double> logits;
    std::vector<double> probs;
  };

  Discriminator() = default;
  Discriminator(std::size_t freq_bins, std::size_t crop_frames);
  void Init(RandomStream *rng, double stddev = kInitStddev);

  std::size_t freq_bins() const { return freq_bins_; }
  std::size_t crop_frames() const { return crop_frames_; }
  // Spatial size after the conv stack, and the fc input length.
  std::size_t reduced_freq() const { return reduced_freq_; }
  std::size_t reduced_time() const { return reduced_time_; }
  std::size_t FlattenSize() const { return kChannels.back() * reduced_freq_ * reduced_time_; }

  // Probability of "real" per batch item.
  std::vector<double> Forward(const Tensor4 &x, Cache *cache = nullptr) const;
  // grad_probs is dL/dp per batch item.  Parameter gradients are accumulated
  // only when accumulate_params is set (the generator step needs just dL/dx).
  Tensor4 Backward(const Cache &cache, std::span<const double> grad_probs,
                   bool accumulate_params, bool need_input_grad);

  std::vector<Parameter *> Parameters();
  std::vector<const Parameter *> Parameters() const;
  void ZeroGrad();

  std::array<Conv2dLayer, 4> convs;
  LinearLayer fc;

 private:
  std::size_t freq_bins_ = 0;
  std::size_t crop_frames_ = 0;
  std::size_t reduced_freq_ = 0;
  std::size_t reduced_time_ = 0;
};

}  // namespace dysaug

#endif  // DYSAUG_GAN_NETWORKS_H_
