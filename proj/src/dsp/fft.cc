// dsp/fft.cc

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

#include "dysaug/dsp/fft.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "dysaug/base/errors.h"
#include "dysaug/dsp/window.h"

namespace dysaug {

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void FftInPlace(std::span<Complex> data, bool inverse) {
  const std::size_t n = data.size();
  if (!IsPowerOfTwo(n))
    ThrowValidation("FFT size must be a power of two, got ", n);

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    // Twiddles are evaluated directly rather than by recurrence; the
    // recurrence drifts by ~1e-13 at N = 2^16.
    for (std::size_t k = 0; k < half; ++k) {
      const double angle = sign * 2.0 * std::numbers::pi *
                           static_cast<double>(k) / static_cast<double>(len);
      const Complex w(std::cos(angle), std::sin(angle));
      for (std::size_t start = 0; start < n; start += len) {
        Complex u = data[start + k];
        Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

std::vector<Complex> FftReal(std::span<const double> frame) {
  const std::size_t n = frame.size();
  if (!IsPowerOfTwo(n))
    ThrowValidation("FftReal: frame length must be a power of two, got ", n);
  std::vector<Complex> buf(frame.begin(), frame.end());
  FftInPlace(buf, false);
  buf.resize(n / 2 + 1);
  return buf;
}

std::vector<double> InverseFftReal(std::span<const Complex> bins,
                                   std::size_t n) {
  if (!IsPowerOfTwo(n))
    ThrowValidation("InverseFftReal: length must be a power of two, got ", n);
  if (bins.size() != n / 2 + 1)
    ThrowValidation("InverseFftReal: expected ", n / 2 + 1, " bins, got ",
                    bins.size());
  std::vector<Complex> full(n);
  for (std::size_t k = 0; k <= n / 2; ++k) full[k] = bins[k];
  for (std::size_t k = n / 2 + 1; k < n; ++k) full[k] = std::conj(bins[n - k]);
  FftInPlace(full, true);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = full[i].real() / static_cast<double>(n);
  return out;
}

std::vector<double> PowerSpectrum(std::span<const double> signal,
                                  std::size_t *fft_size) {
  if (signal.empty()) ThrowValidation("PowerSpectrum: empty signal");
  const std::size_t n = NextPowerOfTwo(signal.size());
  std::vector<double> win = HannWindow(signal.size());
  std::vector<double> frame(n, 0.0);
  for (std::size_t i = 0; i < signal.size(); ++i) frame[i] = signal[i] * win[i];
  std::vector<Complex> bins = FftReal(frame);
  std::vector<double> power(bins.size());
  for (std::size_t k = 0; k < bins.size(); ++k) power[k] = std::norm(bins[k]);
  if (fft_size != nullptr) *fft_size = n;
  return power;
}

double PeakFrequencyHz(std::span<const double> signal, int sample_rate_hz) {
  std::size_t n = 0;
  std::vector<double> power = PowerSpectrum(signal, &n);
  std::size_t best = 1;
  for (std::size_t k = 1; k < power.size(); ++k)
    if (power[k] > power[best]) best = k;
  return static_cast<double>(best) * sample_rate_hz / static_cast<double>(n);
}

}  // namespace dysaug
