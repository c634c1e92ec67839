// dsp/wav-io.h

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

#ifndef DYSAUG_DSP_WAV_IO_H_
#define DYSAUG_DSP_WAV_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "dysaug/dsp/audio.h"

namespace dysaug {

// RIFF/WAVE, PCM format tag 1, 16-bit signed little-endian, mono.  Anything
// else is rejected with a diagnostic naming the offending chunk.  Samples are
// mapped to s / 32768.
AudioClip ParseWav(std::string_view bytes, std::string_view name);
AudioClip ReadWav(const std::filesystem::path &path);

// Samples are scaled by 32768, rounded and saturated to int16.
std::string EncodeWav(const AudioClip &clip);
void WriteWav(const std::filesystem::path &path, const AudioClip &clip);

}  // namespace dysaug

#endif  // DYSAUG_DSP_WAV_IO_H_
