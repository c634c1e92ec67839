// dsp/audio.cc

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

#include "dysaug/dsp/audio.h"

#include <cmath>

#include "dysaug/base/errors.h"

namespace dysaug {

void ValidateClip(const AudioClip &clip, std::string_view context) {
  if (clip.sample_rate_hz <= 0)
    ThrowValidation(context, ": sample rate must be positive, got ",
                    clip.sample_rate_hz);
  if (clip.samples.empty())
    ThrowValidation(context, ": clip '", clip.utterance_id, "' is empty");
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    if (!std::isfinite(clip.samples[i]))
      ThrowValidation(context, ": clip '", clip.utterance_id,
                      "' has a non-finite sample at index ", i);
  }
}

}  // namespace dysaug
