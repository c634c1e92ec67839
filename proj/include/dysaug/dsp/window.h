// dsp/window.h

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

#ifndef DYSAUG_DSP_WINDOW_H_
#define DYSAUG_DSP_WINDOW_H_

#include <cstddef>
#include <vector>

namespace dysaug {

enum class WindowKind { kHann, kRectangular };

struct WindowFn {
  WindowKind kind = WindowKind::kHann;
  std::size_t length = 0;

  // Symmetric form: a Hann window of length L has w(0) = w(L-1) = 0.
  std::vector<double> Coefficients() const;
};

inline std::vector<double> HannWindow(std::size_t length) {
  return WindowFn{WindowKind::kHann, length}.Coefficients();
}

}  // namespace dysaug

#endif  // DYSAUG_DSP_WINDOW_H_
