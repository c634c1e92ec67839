// features/fbank.h

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

#ifndef DYSAUG_FEATURES_FBANK_H_
#define DYSAUG_FEATURES_FBANK_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dysaug/dsp/audio.h"

namespace dysaug {

inline constexpr std::size_t kNumMelBins = 40;

// T x F log-mel energies, row-major (one row per frame).
struct FbankMatrix {
  std::size_t num_frames = 0;
  std::size_t num_bins = 0;
  std::vector<double> values;
  double frame_shift_sec = 0.010;
  std::string speaker_id;
  std::string utterance_id;

  FbankMatrix() = default;
  FbankMatrix(std::size_t frames, std::size_t bins, double fill = 0.0)
      : num_frames(frames), num_bins(bins), values(frames * bins, fill) {}

  double &at(std::size_t t, std::size_t f) { return values[t * num_bins + f]; }
  double at(std::size_t t, std::size_t f) const { return values[t * num_bins + f]; }
  std::span<double> Row(std::size_t t) {
    return {values.data() + t * num_bins, num_bins};
  }
  std::span<const double> Row(std::size_t t) const {
    return {values.data() + t * num_bins, num_bins};
  }

  // Copy of frames [begin, begin + count).
  FbankMatrix Frames(std::size_t begin, std::size_t count) const;
};

struct FbankOptions {
  std::size_t num_mel_bins = kNumMelBins;
  double frame_length_sec = 0.025;
  double frame_shift_sec = 0.010;
  double preemphasis = 0.97;
  double energy_floor = 1e-10;
};

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular filters with edges equally spaced on the mel scale between
// 0 Hz and Nyquist, evaluated on the bins of a real FFT of size fft_size.
class MelBanks {
 public:
  MelBanks(std::size_t num_bins, int sample_rate_hz, std::size_t fft_size);

  std::size_t num_bins() const { return filters_.size(); }
  double CenterHz(std::size_t bin) const { return centers_hz_[bin]; }
  // Energy of bin m from a power spectrum of fft_size/2+1 values.
  double Apply(std::size_t bin, std::span<const double> power) const;

 private:
  struct Filter {
    std::size_t first_fft_bin = 0;
    std::vector<double> weights;
  };
  std::vector<Filter> filters_;
  std::vector<double> centers_hz_;
};

// Frame geometry in samples for a given rate.
struct FrameGeometry {
  std::size_t frame_length = 0;
  std::size_t frame_shift = 0;
  std::size_t fft_size = 0;
};
FrameGeometry GetFrameGeometry(const FbankOptions &opts, int sample_rate_hz);

// 1 + floor((num_samples - frame_length) / frame_shift); 0 if too short.
std::size_t NumFrames(std::size_t num_samples, const FrameGeometry &geom);

// Per frame: pre-emphasis, symmetric Hann window, zero-pad to a power of
// two, power spectrum, mel filterbank, log(max(E, energy_floor)).  Frames
// are processed in parallel.
FbankMatrix ExtractFbank(const AudioClip &clip, const FbankOptions &opts = {});

namespace reference {
// Serial frame loop; bit-identical to dysaug::ExtractFbank.
FbankMatrix ExtractFbank(const AudioClip &clip, const FbankOptions &opts = {});
}  // namespace reference

}  // namespace dysaug

#endif  // DYSAUG_FEATURES_FBANK_H_
