// neural/losses.h

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

#ifndef DYSAUG_NEURAL_LOSSES_H_
#define DYSAUG_NEURAL_LOSSES_H_

#include <span>
#include <vector>

namespace dysaug {

inline constexpr double kProbClamp = 1e-7;

enum class GeneratorLossKind {
  kNonSaturating,  // -mean log D(G(x))
  kMinimax,        // mean log(1 - D(G(x))), the literal inner term
};

// Loss value and its gradient with respect to each input probability.
// Loss values use probabilities clamped to [1e-7, 1 - 1e-7].  Gradients are
// those of the unclamped logs, so a saturated discriminator still passes a
// signal back through the sigmoid.
struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;
};

struct DiscriminatorLoss {
  double loss = 0.0;
  std::vector<double> grad_real;
  std::vector<double> grad_fake;
};

// -mean(log d_real) - mean(log(1 - d_fake)): descent on the negated value
// function.
DiscriminatorLoss DiscriminatorBce(std::span<const double> d_real,
                                   std::span<const double> d_fake);

LossAndGrad GeneratorBce(std::span<const double> d_fake,
                         GeneratorLossKind kind = GeneratorLossKind::kNonSaturating);

struct GanLossValues {
  double loss_d = 0.0;
  double loss_g = 0.0;
};
GanLossValues BceLosses(std::span<const double> d_real, std::span<const double> d_fake,
                        GeneratorLossKind kind = GeneratorLossKind::kNonSaturating);

}  // namespace dysaug

#endif  // DYSAUG_NEURAL_LOSSES_H_
