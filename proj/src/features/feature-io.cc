// features/feature-io.cc

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

#include "dysaug/features/feature-io.h"

#include <cmath>
#include <cstdio>
#include <limits>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"

namespace dysaug {

namespace {
constexpr std::string_view kMagic = "FBK1";
}

std::string EncodeFbank(const FbankMatrix &mat) {
  if (mat.values.size() != mat.num_frames * mat.num_bins)
    ThrowValidation("EncodeFbank: value count does not match ", mat.num_frames,
                    "x", mat.num_bins);
  if (mat.num_frames > std::numeric_limits<std::uint32_t>::max() ||
      mat.num_bins > std::numeric_limits<std::uint32_t>::max())
    ThrowValidation("EncodeFbank: matrix too large for FBK1");
  if (mat.speaker_id.find('\n') != std::string::npos ||
      mat.utterance_id.find('\n') != std::string::npos)
    ThrowValidation("EncodeFbank: ids must not contain newlines");
  ByteWriter w;
  w.PutBytes(kMagic);
  w.PutU32(static_cast<std::uint32_t>(mat.num_frames));
  w.PutU32(static_cast<std::uint32_t>(mat.num_bins));
  for (double v : mat.values) w.PutF32(static_cast<float>(v));
  w.PutBytes("speaker=");
  w.PutBytes(mat.speaker_id);
  w.PutBytes("\nutt=");
  w.PutBytes(mat.utterance_id);
  w.PutBytes("\n");
  return w.bytes();
}

FbankMatrix DecodeFbank(std::string_view bytes, std::string_view name) {
  ByteReader r(bytes, std::string(name));
  if (r.remaining() < 4 || r.GetBytes(4) != kMagic)
    ThrowValidation(name, ": bad magic, not an FBK1 feature file");
  const std::uint32_t frames = r.GetU32();
  const std::uint32_t bins = r.GetU32();
  const std::uint64_t n = static_cast<std::uint64_t>(frames) * bins;
  if (n * 4 > r.remaining())
    ThrowValidation(name, ": header claims ", frames, "x", bins,
                    " values but only ", r.remaining(), " bytes follow");
  FbankMatrix mat(frames, bins);
  for (double &v : mat.values) {
    v = r.GetF32();
    if (!std::isfinite(v)) ThrowValidation(name, ": non-finite feature value");
  }
  const std::string footer(r.GetBytes(r.remaining()));
  const std::string spk_key = "speaker=", utt_key = "\nutt=";
  const std::size_t utt_pos = footer.find(utt_key);
  if (footer.compare(0, spk_key.size(), spk_key) != 0 ||
      utt_pos == std::string::npos)
    ThrowValidation(name, ": malformed footer (expected speaker= and utt= lines)");
  if (footer.back() != '\n' || footer.find('\n', utt_pos + 1) != footer.size() - 1)
    ThrowValidation(name, ": malformed footer after 'utt='");
  mat.speaker_id = footer.substr(spk_key.size(), utt_pos - spk_key.size());
  const std::size_t utt_begin = utt_pos + utt_key.size();
  mat.utterance_id = footer.substr(utt_begin, footer.size() - 1 - utt_begin);
  return mat;
}

void WriteFbank(const std::filesystem::path &path, const FbankMatrix &mat) {
  WriteFileBytes(path, EncodeFbank(mat));
}

FbankMatrix ReadFbank(const std::filesystem::path &path) {
  return DecodeFbank(ReadFileBytes(path), path.string());
}

std::string FormatFbankText(const FbankMatrix &mat) {
  std::string out;
  char buf[32];
  for (std::size_t t = 0; t < mat.num_frames; ++t) {
    for (std::size_t f = 0; f < mat.num_bins; ++f) {
      std::snprintf(buf, sizeof(buf), f == 0 ? "%.9g" : " %.9g", mat.at(t, f));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace dysaug
