// features/feature-io.h

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

#ifndef DYSAUG_FEATURES_FEATURE_IO_H_
#define DYSAUG_FEATURES_FEATURE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "dysaug/features/fbank.h"

namespace dysaug {

// Binary layout:
//   "FBK1" | u32 T | u32 F | T*F float32, row-major | "speaker=<id>\nutt=<id>\n"
// Integers and floats are little-endian.  Values are stored as float32, so a
// decoded matrix holds the float-rounded values and re-encodes to the same
// bytes.
std::string EncodeFbank(const FbankMatrix &mat);
FbankMatrix DecodeFbank(std::string_view bytes, std::string_view name);

void WriteFbank(const std::filesystem::path &path, const FbankMatrix &mat);
FbankMatrix ReadFbank(const std::filesystem::path &path);

// One frame per line, values separated by single spaces, 9 significant
// digits.
std::string FormatFbankText(const FbankMatrix &mat);

}  // namespace dysaug

#endif  // DYSAUG_FEATURES_FEATURE_IO_H_
