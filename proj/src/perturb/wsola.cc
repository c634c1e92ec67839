// perturb/wsola.cc

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

#include "dysaug/perturb/wsola.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dysaug/base/errors.h"
#include "dysaug/dsp/resample.h"
#include "dysaug/dsp/xcorr.h"

namespace dysaug {

namespace {
constexpr double kOverlapFloor = 1e-3;
}

WsolaConfig WsolaConfig::ForSampleRate(int sample_rate_hz) {
  if (sample_rate_hz <= 0)
    ThrowValidation("WsolaConfig: sample rate must be positive");
  WsolaConfig cfg;
  cfg.block_len = static_cast<std::size_t>(std::lround(0.040 * sample_rate_hz));
  if (cfg.block_len % 2 == 1) ++cfg.block_len;
  cfg.block_len = std::max<std::size_t>(cfg.block_len, 2);
  cfg.synthesis_hop = cfg.block_len / 2;
  cfg.delta_max = static_cast<std::size_t>(std::lround(0.010 * sample_rate_hz));
  if (cfg.delta_max >= cfg.synthesis_hop) cfg.delta_max = cfg.synthesis_hop - 1;
  return cfg;
}

void WsolaConfig::Validate() const {
  if (block_len == 0 || synthesis_hop == 0)
    ThrowValidation("WsolaConfig: block_len and synthesis_hop must be positive");
  if (synthesis_hop > block_len)
    ThrowValidation("WsolaConfig: synthesis_hop ", synthesis_hop,
                    " exceeds block_len ", block_len, " (blocks must overlap)");
  if (delta_max >= synthesis_hop)
    ThrowValidation("WsolaConfig: delta_max ", delta_max,
                    " must be smaller than synthesis_hop ", synthesis_hop);
}

AudioClip TempoPerturb(const AudioClip &clip, double alpha,
                       const WsolaConfig &cfg) {
  ValidateClip(clip, "TempoPerturb");
  cfg.Validate();
  if (!(alpha >= kMinPerturbFactor && alpha <= kMaxPerturbFactor))
    ThrowValidation("TempoPerturb: factor ", alpha, " outside [",
                    kMinPerturbFactor, ", ", kMaxPerturbFactor, "]");
  const std::vector<double> &x = clip.samples;
  const std::ptrdiff_t n_in = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t block = static_cast<std::ptrdiff_t>(cfg.block_len);
  const std::ptrdiff_t hop_s = static_cast<std::ptrdiff_t>(cfg.synthesis_hop);
  if (n_in < block)
    ThrowValidation("TempoPerturb: clip '", clip.utterance_id, "' has ", n_in,
                    " samples, shorter than one block (", block, ")");

  const double hop_a = alpha * static_cast<double>(hop_s);
  const int delta_max = static_cast<int>(std::min<double>(
      static_cast<double>(cfg.delta_max), std::ceil(hop_a) - 1.0));

  auto sample = [&](std::ptrdiff_t i) {
    return (i >= 0 && i < n_in) ? x[i] : 0.0;
  };

  const std::size_t n_out = ResampledLength(x.size(), alpha);
  const std::vector<double> w = WindowFn{cfg.window, cfg.block_len}.Coefficients();
  std::vector<double> w2(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) w2[r] = w[r] * w[r];

  std::vector<double> acc(n_out + cfg.block_len, 0.0);
  std::vector<double> weight(n_out + cfg.block_len, 0.0);
  std::vector<double> continuation(cfg.block_len);
  std::vector<double> region(cfg.block_len + 2 * delta_max);

  std::ptrdiff_t prev_pos = 0;
  for (std::ptrdiff_t m = 0; m * hop_s < static_cast<std::ptrdiff_t>(n_out); ++m) {
    std::ptrdiff_t pos = 0;
    if (m > 0) {
      const std::ptrdiff_t nominal =
          static_cast<std::ptrdiff_t>(std::llround(m * hop_a));
      for (std::ptrdiff_t r = 0; r < block; ++r)
        continuation[r] = sample(prev_pos + hop_s + r);
      for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(region.size()); ++r)
        region[r] = sample(nominal - delta_max + r);
      XcorrResult best = CrossCorrelation(continuation, region, delta_max, delta_max);
      pos = nominal + best.best_lag;
    }
    const std::ptrdiff_t out_base = m * hop_s;
    for (std::ptrdiff_t r = 0; r < block; ++r) {
      acc[out_base + r] += w2[r] * sample(pos + r);
      weight[out_base + r] += w2[r];
    }
    prev_pos = pos;
  }

  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.speaker_id = clip.speaker_id;
  out.utterance_id = clip.utterance_id;
  out.samples.resize(n_out);
  for (std::size_t i = 0; i < n_out; ++i)
    out.samples[i] = acc[i] / std::max(weight[i], kOverlapFloor);
  return out;
}

AudioClip TempoPerturb(const AudioClip &clip, double alpha) {
  return TempoPerturb(clip, alpha, WsolaConfig::ForSampleRate(clip.sample_rate_hz));
}

}  // namespace dysaug
