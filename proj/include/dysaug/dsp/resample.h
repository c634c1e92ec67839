// dsp/resample.h

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

#ifndef DYSAUG_DSP_RESAMPLE_H_
#define DYSAUG_DSP_RESAMPLE_H_

#include "dysaug/dsp/audio.h"

namespace dysaug {

inline constexpr double kMinPerturbFactor = 0.5;
inline constexpr double kMaxPerturbFactor = 2.0;

// Kaiser-windowed sinc interpolator.
struct SincKernel {
  int zero_crossings_per_side = 16;
  double kaiser_beta = 8.6;
};

// Reads the clip at fractional positions ratio * n, i.e. y(t) = x(ratio * t).
// The output keeps the input sample rate, has round(N / ratio) samples, and a
// tone at f0 comes out at ratio * f0.  For ratio > 1 the kernel cutoff drops
// to Nyquist / ratio so that shifted content does not alias.
// ratio must lie in [0.5, 2.0].
AudioClip Resample(const AudioClip &clip, double ratio,
                   const SincKernel &kernel = {});

// Output length for an input of n samples.
std::size_t ResampledLength(std::size_t n, double ratio);

namespace reference {
// Serial loop over output samples; bit-identical to dysaug::Resample.
AudioClip Resample(const AudioClip &clip, double ratio,
                   const SincKernel &kernel = {});
}  // namespace reference

}  // namespace dysaug

#endif  // DYSAUG_DSP_RESAMPLE_H_
