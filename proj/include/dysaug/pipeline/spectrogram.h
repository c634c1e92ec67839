// pipeline/spectrogram.h

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

#ifndef DYSAUG_PIPELINE_SPECTROGRAM_H_
#define DYSAUG_PIPELINE_SPECTROGRAM_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "dysaug/features/fbank.h"

namespace dysaug {

enum class SpectrogramFormat { kCsv, kPgm };

SpectrogramFormat ParseSpectrogramFormat(std::string_view name);  // csv | pgm

// One frame per line, comma-separated, %.9g.
std::string FormatSpectrogramCsv(const FbankMatrix &mat);
FbankMatrix ParseSpectrogramCsv(std::string_view text, const std::string &name);

// Binary 8-bit PGM, one column per frame and one row per mel bin with the
// highest bin on top.  Values map affinely from [min, max] onto [0, 255];
// the header comment records min and max.  A constant matrix renders as a
// single mid-gray level.
std::string FormatSpectrogramPgm(const FbankMatrix &mat);

void WriteSpectrogram(const std::filesystem::path &path, const FbankMatrix &mat,
                      SpectrogramFormat format);

}  // namespace dysaug

#endif  // DYSAUG_PIPELINE_SPECTROGRAM_H_
