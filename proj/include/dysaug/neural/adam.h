// neural/adam.h

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

#ifndef DYSAUG_NEURAL_ADAM_H_
#define DYSAUG_NEURAL_ADAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "dysaug/neural/tensor.h"

namespace dysaug {

struct AdamOptions {
  double beta1 = 0.5;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::uint64_t step = 0;
  AdamOptions options;
  std::vector<std::vector<double>> first_moment;   // one per parameter
  std::vector<std::vector<double>> second_moment;

  // Zeroed moments shaped like `params`.
  static AdamState For(std::span<Parameter *const> params, AdamOptions options = {});
};

// One bias-corrected Adam update using each parameter's `grad`.  All
// gradients are checked first: a non-finite entry throws std::runtime_error
// naming the parameter, and nothing is modified.
void AdamStep(std::span<Parameter *const> params, AdamState *state, double lr);

}  // namespace dysaug

#endif  // DYSAUG_NEURAL_ADAM_H_
