// gan/grad-suite.h

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

#ifndef DYSAUG_GAN_GRAD_SUITE_H_
#define DYSAUG_GAN_GRAD_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/neural/grad-check.h"

namespace dysaug {

struct GradCheckResult {
  std::string name;
  double max_rel_error = 0.0;
  std::size_t num_checked = 0;
  bool passed = false;
};

// Central-difference checks of every differentiable op used by the GAN:
// conv (replicate and no padding), relu, sigmoid, fc, both BCE losses, and
// both losses backpropagated through the full networks.
std::vector<GradCheckResult> RunGradientSuite(std::uint64_t seed = kDefaultSeed,
                                              double tolerance = kGradCheckTolerance);

}  // namespace dysaug

#endif  // DYSAUG_GAN_GRAD_SUITE_H_
