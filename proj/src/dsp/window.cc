// dsp/window.cc

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

#include "dysaug/dsp/window.h"

#include <cmath>
#include <numbers>

namespace dysaug {

std::vector<double> WindowFn::Coefficients() const {
  std::vector<double> w(length, 1.0);
  if (kind == WindowKind::kRectangular || length < 2) return w;
  const double denom = static_cast<double>(length - 1);
  for (std::size_t i = 0; i < length; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / denom);
  // cos(2 pi) is not exactly 1 in floating point.
  w.front() = 0.0;
  w.back() = 0.0;
  return w;
}

}  // namespace dysaug
