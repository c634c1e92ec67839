// neural/grad-check.cc

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

#include "dysaug/neural/grad-check.h"

#include <algorithm>
#include <cmath>

#include "dysaug/base/errors.h"

namespace dysaug {

std::vector<double> NumericGradient(const std::function<double()> &f,
                                    std::vector<double> *x, double h) {
  std::vector<double> g(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) {
    const double orig = (*x)[i];
    (*x)[i] = orig + h;
    const double up = f();
    (*x)[i] = orig - h;
    const double down = f();
    (*x)[i] = orig;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

double MaxRelativeError(std::span<const double> analytic,
                        std::span<const double> numeric) {
  if (analytic.size() != numeric.size())
    ThrowValidation("MaxRelativeError: size mismatch (", analytic.size(), " vs ",
                    numeric.size(), ")");
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    const double a = analytic[i], b = numeric[i];
    const double denom = std::max({std::abs(a), std::abs(b), 1e-7});
    worst = std::max(worst, std::abs(a - b) / denom);
  }
  return worst;
}

}  // namespace dysaug
