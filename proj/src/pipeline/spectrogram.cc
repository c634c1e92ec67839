// pipeline/spectrogram.cc

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

#include "dysaug/pipeline/spectrogram.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"

namespace dysaug {

SpectrogramFormat ParseSpectrogramFormat(std::string_view name) {
  if (name == "csv") return SpectrogramFormat::kCsv;
  if (name == "pgm") return SpectrogramFormat::kPgm;
  ThrowValidation("unknown spectrogram format '", name, "' (expected csv or pgm)");
}

std::string FormatSpectrogramCsv(const FbankMatrix &mat) {
  std::string out;
  char buf[32];
  for (std::size_t t = 0; t < mat.num_frames; ++t) {
    for (std::size_t f = 0; f < mat.num_bins; ++f) {
      std::snprintf(buf, sizeof(buf), "%s%.9g", f ? "," : "", mat.at(t, f));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

FbankMatrix ParseSpectrogramCsv(std::string_view text, const std::string &name) {
  FbankMatrix mat;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::size_t count = 0;
    const char *p = line.c_str();
    while (true) {
      char *next = nullptr;
      const double v = std::strtod(p, &next);
      if (next == p) ThrowValidation(name, ":", line_no, ": expected a number");
      mat.values.push_back(v);
      ++count;
      if (*next == '\0') break;
      if (*next != ',') ThrowValidation(name, ":", line_no, ": expected ','");
      p = next + 1;
    }
    if (mat.num_frames == 0) mat.num_bins = count;
    if (count != mat.num_bins)
      ThrowValidation(name, ":", line_no, ": ", count, " columns, expected ", mat.num_bins);
    ++mat.num_frames;
  }
  return mat;
}

std::string FormatSpectrogramPgm(const FbankMatrix &mat) {
  if (mat.values.empty()) ThrowValidation("spectrogram: matrix is empty");
  const auto [lo_it, hi_it] = std::minmax_element(mat.values.begin(), mat.values.end());
  const double lo = *lo_it, hi = *hi_it;
  char header[160];
  std::snprintf(header, sizeof(header), "P5\n# min=%.9g max=%.9g\n%zu %zu\n255\n", lo, hi,
                mat.num_frames, mat.num_bins);
  std::string out = header;
  for (std::size_t row = 0; row < mat.num_bins; ++row) {
    const std::size_t f = mat.num_bins - 1 - row;
    for (std::size_t t = 0; t < mat.num_frames; ++t) {
      long v = 128;
      if (hi > lo) v = std::lround(255.0 * (mat.at(t, f) - lo) / (hi - lo));
      out += static_cast<char>(static_cast<unsigned char>(std::clamp(v, 0L, 255L)));
    }
  }
  return out;
}

void WriteSpectrogram(const std::filesystem::path &path, const FbankMatrix &mat,
                      SpectrogramFormat format) {
  WriteFileBytes(path, format == SpectrogramFormat::kCsv ? FormatSpectrogramCsv(mat)
                                                         : FormatSpectrogramPgm(mat));
}

}  // namespace dysaug
