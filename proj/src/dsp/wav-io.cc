// dsp/wav-io.cc

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

#include "dysaug/dsp/wav-io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"

namespace dysaug {

AudioClip ParseWav(std::string_view bytes, std::string_view name) {
  ByteReader r(bytes, std::string(name));
  if (r.remaining() < 12 || r.GetBytes(4) != "RIFF")
    ThrowValidation(name, ": RIFF chunk missing (not a WAV file)");
  r.GetU32();  // RIFF size; not trusted
  if (r.GetBytes(4) != "WAVE")
    ThrowValidation(name, ": RIFF chunk has form type other than WAVE");

  bool have_fmt = false;
  AudioClip clip;
  while (r.remaining() >= 8) {
    std::string chunk_id(r.GetBytes(4));
    const std::uint32_t size = r.GetU32();
    if (chunk_id == "fmt ") {
      if (size < 16) ThrowValidation(name, ": 'fmt ' chunk too short (", size, ")");
      ByteReader fmt(r.GetBytes(size), std::string(name) + " 'fmt ' chunk");
      const std::uint16_t tag = fmt.GetU16();
      const std::uint16_t channels = fmt.GetU16();
      const std::uint32_t rate = fmt.GetU32();
      fmt.GetU32();  // byte rate
      fmt.GetU16();  // block align
      const std::uint16_t bits = fmt.GetU16();
      if (tag != 1)
        ThrowValidation(name, ": 'fmt ' chunk has format tag ", tag,
                        ", only PCM (1) is supported");
      if (channels != 1)
        ThrowValidation(name, ": 'fmt ' chunk declares ", channels,
                        " channels, only mono is supported");
      if (bits != 16)
        ThrowValidation(name, ": 'fmt ' chunk declares ", bits,
                        " bits per sample, only 16 is supported");
      if (rate == 0) ThrowValidation(name, ": 'fmt ' chunk has zero sample rate");
      clip.sample_rate_hz = static_cast<int>(rate);
      have_fmt = true;
    } else if (chunk_id == "data") {
      if (!have_fmt) ThrowValidation(name, ": 'data' chunk precedes 'fmt ' chunk");
      if (size % 2 != 0)
        ThrowValidation(name, ": 'data' chunk has odd byte count ", size);
      ByteReader data(r.GetBytes(size), std::string(name) + " 'data' chunk");
      clip.samples.resize(size / 2);
      for (double &s : clip.samples) s = data.GetI16() / 32768.0;
      return clip;
    } else {
      r.Skip(size);
    }
    if (size % 2 == 1 && r.remaining() > 0) r.Skip(1);  // RIFF pad byte
  }
  ThrowValidation(name, have_fmt ? ": no 'data' chunk" : ": no 'fmt ' chunk");
}

AudioClip ReadWav(const std::filesystem::path &path) {
  return ParseWav(ReadFileBytes(path), path.string());
}

std::string EncodeWav(const AudioClip &clip) {
  ValidateClip(clip, "EncodeWav");
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(clip.samples.size() * 2);
  ByteWriter w;
  w.PutBytes("RIFF");
  w.PutU32(36 + data_bytes);
  w.PutBytes("WAVE");
  w.PutBytes("fmt ");
  w.PutU32(16);
  w.PutU16(1);
  w.PutU16(1);
  w.PutU32(static_cast<std::uint32_t>(clip.sample_rate_hz));
  w.PutU32(static_cast<std::uint32_t>(clip.sample_rate_hz) * 2);
  w.PutU16(2);
  w.PutU16(16);
  w.PutBytes("data");
  w.PutU32(data_bytes);
  for (double s : clip.samples) {
    double v = std::round(s * 32768.0);
    v = std::clamp(v, -32768.0, 32767.0);
    w.PutI16(static_cast<std::int16_t>(v));
  }
  return w.bytes();
}

void WriteWav(const std::filesystem::path &path, const AudioClip &clip) {
  WriteFileBytes(path, EncodeWav(clip));
}

}  // namespace dysaug
