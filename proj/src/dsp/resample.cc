// dsp/resample.cc

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

#include "dysaug/dsp/resample.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dysaug/base/errors.h"

namespace dysaug {
namespace {

struct KernelGeometry {
  double cutoff;      // fraction of the input Nyquist
  double half_width;  // in input samples
  double beta;
  double inv_i0_beta;
};

KernelGeometry MakeGeometry(double ratio, const SincKernel &kernel) {
  KernelGeometry g;
  g.cutoff = std::min(1.0, 1.0 / ratio);
  g.half_width = kernel.zero_crossings_per_side / g.cutoff;
  g.beta = kernel.kaiser_beta;
  g.inv_i0_beta = 1.0 / std::cyl_bessel_i(0.0, g.beta);
  return g;
}

double KernelValue(double d, const KernelGeometry &g) {
  const double u = d / g.half_width;
  if (u <= -1.0 || u >= 1.0) return 0.0;
  const double x = g.cutoff * d;
  const double sinc =
      (x == 0.0) ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
  const double kaiser =
      std::cyl_bessel_i(0.0, g.beta * std::sqrt(1.0 - u * u)) * g.inv_i0_beta;
  return g.cutoff * sinc * kaiser;
}

// Value of the band-limited reconstruction of x at fractional position t.
double InterpolateAt(const std::vector<double> &x, double t,
                     const KernelGeometry &g) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(std::ceil(t - g.half_width));
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(std::floor(t + g.half_width));
  lo = std::max<std::ptrdiff_t>(lo, 0);
  hi = std::min<std::ptrdiff_t>(hi, n - 1);
  double acc = 0.0;
  for (std::ptrdiff_t k = lo; k <= hi; ++k)
    acc += x[k] * KernelValue(t - static_cast<double>(k), g);
  return acc;
}

void CheckRatio(const AudioClip &clip, double ratio) {
  ValidateClip(clip, "Resample");
  if (!(ratio >= kMinPerturbFactor && ratio <= kMaxPerturbFactor))
    ThrowValidation("Resample: ratio ", ratio, " outside [", kMinPerturbFactor,
                    ", ", kMaxPerturbFactor, "]");
}

AudioClip EmptyLike(const AudioClip &clip, std::size_t n) {
  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.speaker_id = clip.speaker_id;
  out.utterance_id = clip.utterance_id;
  out.samples.resize(n);
  return out;
}

}  // namespace

std::size_t ResampledLength(std::size_t n, double ratio) {
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(n) / ratio)));
}

AudioClip Resample(const AudioClip &clip, double ratio,
                   const SincKernel &kernel) {
  CheckRatio(clip, ratio);
  const KernelGeometry g = MakeGeometry(ratio, kernel);
  AudioClip out = EmptyLike(clip, ResampledLength(clip.samples.size(), ratio));
  const std::ptrdiff_t n_out = static_cast<std::ptrdiff_t>(out.samples.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n_out; ++i)
    out.samples[i] = InterpolateAt(clip.samples, ratio * static_cast<double>(i), g);
  return out;
}

namespace reference {

AudioClip Resample(const AudioClip &clip, double ratio,
                   const SincKernel &kernel) {
  CheckRatio(clip, ratio);
  const KernelGeometry g = MakeGeometry(ratio, kernel);
  AudioClip out = EmptyLike(clip, ResampledLength(clip.samples.size(), ratio));
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] = InterpolateAt(clip.samples, ratio * static_cast<double>(i), g);
  return out;
}

}  // namespace reference
}  // namespace dysaug
