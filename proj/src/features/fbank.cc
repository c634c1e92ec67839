// features/fbank.cc

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

#include "dysaug/features/fbank.h"

#include <algorithm>
#include <cmath>

#include "dysaug/base/errors.h"
#include "dysaug/dsp/fft.h"
#include "dysaug/dsp/window.h"

namespace dysaug {

FbankMatrix FbankMatrix::Frames(std::size_t begin, std::size_t count) const {
  if (begin + count > num_frames)
    ThrowValidation("FbankMatrix::Frames: range [", begin, ", ", begin + count,
                    ") exceeds ", num_frames, " frames");
  FbankMatrix out(count, num_bins);
  std::copy(values.begin() + begin * num_bins,
            values.begin() + (begin + count) * num_bins, out.values.begin());
  out.frame_shift_sec = frame_shift_sec;
  out.speaker_id = speaker_id;
  out.utterance_id = utterance_id;
  return out;
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

MelBanks::MelBanks(std::size_t num_bins, int sample_rate_hz,
                   std::size_t fft_size) {
  if (num_bins == 0) ThrowValidation("MelBanks: need at least one bin");
  const double nyquist = 0.5 * sample_rate_hz;
  const double mel_max = HzToMel(nyquist);
  const double step = mel_max / static_cast<double>(num_bins + 1);
  const std::size_t n_fft_bins = fft_size / 2 + 1;

  filters_.resize(num_bins);
  centers_hz_.resize(num_bins);
  for (std::size_t m = 0; m < num_bins; ++m) {
    const double left = step * m, center = step * (m + 1), right = step * (m + 2);
    centers_hz_[m] = MelToHz(center);
    Filter &f = filters_[m];
    bool started = false;
    for (std::size_t k = 0; k < n_fft_bins; ++k) {
      const double mel = HzToMel(static_cast<double>(k) * sample_rate_hz /
                                 static_cast<double>(fft_size));
      double w = 0.0;
      if (mel > left && mel <= center)
        w = (mel - left) / (center - left);
      else if (mel > center && mel < right)
        w = (right - mel) / (right - center);
      if (w > 0.0) {
        if (!started) {
          f.first_fft_bin = k;
          started = true;
        }
        f.weights.resize(k - f.first_fft_bin + 1, 0.0);
        f.weights.back() = w;
      }
    }
  }
}

double MelBanks::Apply(std::size_t bin, std::span<const double> power) const {
  const Filter &f = filters_[bin];
  double e = 0.0;
  for (std::size_t i = 0; i < f.weights.size(); ++i)
    e += f.weights[i] * power[f.first_fft_bin + i];
  return e;
}

FrameGeometry GetFrameGeometry(const FbankOptions &opts, int sample_rate_hz) {
  FrameGeometry g;
  g.frame_length =
      static_cast<std::size_t>(std::lround(opts.frame_length_sec * sample_rate_hz));
  g.frame_shift =
      static_cast<std::size_t>(std::lround(opts.frame_shift_sec * sample_rate_hz));
  if (g.frame_length == 0 || g.frame_shift == 0)
    ThrowValidation("FbankOptions: frame length/shift round to zero samples");
  g.fft_size = NextPowerOfTwo(g.frame_length);
  return g;
}

std::size_t NumFrames(std::size_t num_samples, const FrameGeometry &geom) {
  if (num_samples < geom.frame_length) return 0;
  return 1 + (num_samples - geom.frame_length) / geom.frame_shift;
}

namespace {

struct FbankPlan {
  FrameGeometry geom;
  std::vector<double> window;
  MelBanks banks;
  std::size_t num_frames;
};

FbankPlan MakePlan(const AudioClip &clip, const FbankOptions &opts) {
  ValidateClip(clip, "ExtractFbank");
  FrameGeometry geom = GetFrameGeometry(opts, clip.sample_rate_hz);
  const std::size_t frames = NumFrames(clip.samples.size(), geom);
  if (frames == 0)
    ThrowValidation("ExtractFbank: clip '", clip.utterance_id, "' has ",
                    clip.samples.size(), " samples, shorter than one frame (",
                    geom.frame_length, ")");
  return {geom, HannWindow(geom.frame_length),
          MelBanks(opts.num_mel_bins, clip.sample_rate_hz, geom.fft_size), frames};
}

void ComputeFrame(const AudioClip &clip, const FbankOptions &opts,
                  const FbankPlan &plan, std::size_t t, std::span<double> row) {
  const std::size_t len = plan.geom.frame_length;
  const double *x = clip.samples.data() + t * plan.geom.frame_shift;
  std::vector<Complex> buf(plan.geom.fft_size, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < len; ++i) {
    const double prev = (i == 0) ? x[0] : x[i - 1];
    buf[i] = Complex((x[i] - opts.preemphasis * prev) * plan.window[i], 0.0);
  }
  FftInPlace(buf, false);
  std::vector<double> power(plan.geom.fft_size / 2 + 1);
  for (std::size_t k = 0; k < power.size(); ++k) power[k] = std::norm(buf[k]);
  for (std::size_t m = 0; m < row.size(); ++m)
    row[m] = std::log(std::max(plan.banks.Apply(m, power), opts.energy_floor));
}

FbankMatrix EmptyMatrix(const AudioClip &clip, const FbankOptions &opts,
                        std::size_t frames) {
  FbankMatrix mat(frames, opts.num_mel_bins);
  mat.frame_shift_sec = opts.frame_shift_sec;
  mat.speaker_id = clip.speaker_id;
  mat.utterance_id = clip.utterance_id;
  return mat;
}

}  // namespace

FbankMatrix ExtractFbank(const AudioClip &clip, const FbankOptions &opts) {
  const FbankPlan plan = MakePlan(clip, opts);
  FbankMatrix mat = EmptyMatrix(clip, opts, plan.num_frames);
  const std::ptrdiff_t frames = static_cast<std::ptrdiff_t>(plan.num_frames);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < frames; ++t)
    ComputeFrame(clip, opts, plan, static_cast<std::size_t>(t), mat.Row(t));
  return mat;
}

namespace reference {

FbankMatrix ExtractFbank(const AudioClip &clip, const FbankOptions &opts) {
  const FbankPlan plan = MakePlan(clip, opts);
  FbankMatrix mat = EmptyMatrix(clip, opts, plan.num_frames);
  for (std::size_t t = 0; t < plan.num_frames; ++t)
    ComputeFrame(clip, opts, plan, t, mat.Row(t));
  return mat;
}

}  // namespace reference
}  // namespace dysaug
