// tests/test-util.h

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

#ifndef DYSAUG_TESTS_TEST_UTIL_H_
#define DYSAUG_TESTS_TEST_UTIL_H_

#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/dsp/audio.h"
#include "dysaug/features/fbank.h"

namespace dysaug {
namespace testing {

inline AudioClip Tone(double hz, double sec, int sr = 16000, double amp = 0.5) {
  AudioClip c;
  c.sample_rate_hz = sr;
  const std::size_t n = static_cast<std::size_t>(std::llround(sec * sr));
  c.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    c.samples[i] = amp * std::sin(2.0 * std::numbers::pi * hz * i / sr);
  c.speaker_id = "spk";
  c.utterance_id = "tone";
  return c;
}

inline AudioClip NoiseClip(std::uint64_t seed, std::size_t n, double amp = 0.1) {
  RandomStream rng(seed);
  AudioClip c;
  c.samples.resize(n);
  for (double &x : c.samples) x = amp * rng.Normal();
  c.speaker_id = "spk";
  c.utterance_id = "noise";
  return c;
}

// O(N^2) DFT, bins 0..N/2.
inline std::vector<std::complex<double>> DirectDft(const std::vector<double> &x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::complex<double> s = 0.0;
    for (std::size_t t = 0; t < n; ++t)
      s += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * double(k * t % n) / double(n));
    out[k] = s;
  }
  return out;
}

// Normalized cross-correlation at zero lag over the common prefix.
inline double Ncc(const std::vector<double> &a, const std::vector<double> &b) {
  const std::size_t n = std::min(a.size(), b.size());
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

// Independent log-mel reference: direct DFT of each frame and triangle
// weights evaluated from the mel formula per FFT bin.
inline FbankMatrix DirectFbank(const AudioClip &clip) {
  const int sr = clip.sample_rate_hz;
  const std::size_t len = static_cast<std::size_t>(std::lround(0.025 * sr));
  const std::size_t shift = static_cast<std::size_t>(std::lround(0.010 * sr));
  std::size_t nfft = 1;
  while (nfft < len) nfft *= 2;
  const std::size_t frames =
      clip.samples.size() < len ? 0 : 1 + (clip.samples.size() - len) / shift;
  auto mel = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  const double top = mel(sr / 2.0);
  const std::size_t nb = 40;
  FbankMatrix out(frames, nb);
  for (std::size_t t = 0; t < frames; ++t) {
    std::vector<double> frame(nfft, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      const double x = clip.samples[t * shift + i];
      const double prev = clip.samples[t * shift + (i ? i - 1 : 0)];
      const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (len - 1.0));
      frame[i] = (x - 0.97 * prev) * w;
    }
    const auto spec = DirectDft(frame);
    for (std::size_t m = 0; m < nb; ++m) {
      const double l = top * m / (nb + 1.0), c = top * (m + 1) / (nb + 1.0),
                   r = top * (m + 2) / (nb + 1.0);
      double e = 0.0;
      for (std::size_t k = 0; k < spec.size(); ++k) {
        const double mk = mel(double(k) * sr / double(nfft));
        const double w = std::max(0.0, std::min((mk - l) / (c - l), (r - mk) / (r - c)));
        e += w * std::norm(spec[k]);
      }
      out.at(t, m) = std::log(std::max(e, 1e-10));
    }
  }
  return out;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path TempDir(const std::string &name) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / ("dysaug-test-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace testing
}  // namespace dysaug

#endif  // DYSAUG_TESTS_TEST_UTIL_H_
