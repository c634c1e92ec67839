// perturb/wsola.h

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

#ifndef DYSAUG_PERTURB_WSOLA_H_
#define DYSAUG_PERTURB_WSOLA_H_

#include <cstddef>

#include "dysaug/dsp/audio.h"
#include "dysaug/dsp/window.h"

namespace dysaug {

// Block geometry for waveform-similarity overlap-add.  All sizes in samples.
struct WsolaConfig {
  std::size_t block_len = 640;
  std::size_t synthesis_hop = 320;
  std::size_t delta_max = 160;
  WindowKind window = WindowKind::kHann;

  // 40 ms blocks (rounded up to even), 50% overlap, 10 ms search radius.
  static WsolaConfig ForSampleRate(int sample_rate_hz);

  // Throws ValidationError unless 0 < synthesis_hop <= block_len and
  // delta_max < synthesis_hop.
  void Validate() const;
};

// Changes duration by 1/alpha while keeping pitch and spectral envelope.
//
// The synthesis hop Hs is fixed and the analysis hop is alpha * Hs, so
// alpha < 1 lengthens the clip.  Block 0 is copied from position 0.  Every
// later block m starts at round(m * alpha * Hs) + delta_m, where delta_m in
// [-delta_max, delta_max] maximises the cross-correlation with the natural
// continuation of block m-1 in the input.  The search radius is additionally
// capped below the analysis hop so consecutive search regions cannot swap
// order.  Blocks are Hann-windowed at analysis and at synthesis, overlap-added
// at hop Hs, and the sum is divided by the accumulated squared window
// (floored at 1e-3), so the output is a convex combination of input samples.
// The output has exactly round(N / alpha) samples.
//
// alpha must be in [0.5, 2.0]; the clip must be at least one block long.
AudioClip TempoPerturb(const AudioClip &clip, double alpha,
                       const WsolaConfig &cfg);
AudioClip TempoPerturb(const AudioClip &clip, double alpha);

}  // namespace dysaug

#endif  // DYSAUG_PERTURB_WSOLA_H_
