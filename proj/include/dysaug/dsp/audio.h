// dsp/audio.h

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

#ifndef DYSAUG_DSP_AUDIO_H_
#define DYSAUG_DSP_AUDIO_H_

#include <string>
#include <string_view>
#include <vector>

namespace dysaug {

// Mono waveform.  Samples are doubles nominally in [-1, 1]; conversion to and
// from 16-bit PCM happens only in wav-io.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate_hz = 16000;
  std::string speaker_id;
  std::string utterance_id;

  double DurationSec() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// Throws ValidationError if the clip is empty, has a non-positive rate or
// contains a non-finite sample.  `context` prefixes the diagnostic.
void ValidateClip(const AudioClip &clip, std::string_view context);

}  // namespace dysaug

#endif  // DYSAUG_DSP_AUDIO_H_
