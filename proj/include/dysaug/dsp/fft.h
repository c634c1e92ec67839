// dsp/fft.h

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

#ifndef DYSAUG_DSP_FFT_H_
#define DYSAUG_DSP_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dysaug {

using Complex = std::complex<double>;

constexpr bool IsPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Smallest power of two >= n (n = 0 gives 1).
std::size_t NextPowerOfTwo(std::size_t n);

// In-place iterative radix-2 transform.  Forward uses exp(-2 pi i kn/N); the
// inverse is unscaled (caller divides by N).
void FftInPlace(std::span<Complex> data, bool inverse);

// Forward DFT of a real frame; returns the N/2+1 non-negative-frequency bins.
// N must be a power of two.
std::vector<Complex> FftReal(std::span<const double> frame);

// Inverse of FftReal: takes n/2+1 bins and returns n real samples.
std::vector<double> InverseFftReal(std::span<const Complex> bins, std::size_t n);

// |X_k|^2 of the Hann-windowed signal zero-padded to the next power of two.
std::vector<double> PowerSpectrum(std::span<const double> signal,
                                  std::size_t *fft_size = nullptr);

// Frequency (Hz) of the largest Hann-windowed power-spectrum bin, excluding
// DC.  Resolution is sample_rate / NextPowerOfTwo(signal.size()).
double PeakFrequencyHz(std::span<const double> signal, int sample_rate_hz);

}  // namespace dysaug

#endif  // DYSAUG_DSP_FFT_H_
