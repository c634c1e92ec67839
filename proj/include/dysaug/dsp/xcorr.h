// dsp/xcorr.h

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

#ifndef DYSAUG_DSP_XCORR_H_
#define DYSAUG_DSP_XCORR_H_

#include <cstddef>
#include <span>

namespace dysaug {

struct XcorrResult {
  int best_lag = 0;
  double best_score = 0.0;
};

// Maximises score(lag) = sum_n a[n] * b[b_origin + n + lag] over lag in
// [-max_lag, max_lag]; b outside its bounds reads as zero.  Ties go to the
// smallest |lag|, then to the negative lag.  The lag scan runs in parallel;
// each lag's sum is accumulated in index order so the result does not depend
// on the thread count.
XcorrResult CrossCorrelation(std::span<const double> a, std::span<const double> b,
                             int max_lag, std::ptrdiff_t b_origin = 0);

namespace reference {
// Serial lag scan; bit-identical to dysaug::CrossCorrelation.
XcorrResult CrossCorrelation(std::span<const double> a, std::span<const double> b,
                             int max_lag, std::ptrdiff_t b_origin = 0);
}  // namespace reference

}  // namespace dysaug

#endif  // DYSAUG_DSP_XCORR_H_
