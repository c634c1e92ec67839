// neural/grad-check.h

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

#ifndef DYSAUG_NEURAL_GRAD_CHECK_H_
#define DYSAUG_NEURAL_GRAD_CHECK_H_

#include <functional>
#include <span>
#include <vector>

namespace dysaug {

inline constexpr double kGradCheckStep = 1e-5;
inline constexpr double kGradCheckTolerance = 1e-4;

// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h for every
// coordinate of *x.  *x is restored on return.
std::vector<double> NumericGradient(const std::function<double()> &f,
                                    std::vector<double> *x,
                                    double h = kGradCheckStep);

// max_i |a_i - b_i| / max(|a_i|, |b_i|, 1e-7).  The floor keeps exactly-zero
// pairs from producing 0/0.
double MaxRelativeError(std::span<const double> analytic,
                        std::span<const double> numeric);

}  // namespace dysaug

#endif  // DYSAUG_NEURAL_GRAD_CHECK_H_
