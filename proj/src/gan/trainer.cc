// gan/trainer.cc

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

#include "dysaug/gan/trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dysaug/base/errors.h"
#include "dysaug/neural/adam.h"

namespace dysaug {

void GanTrainConfig::Validate() const {
  if (!(initial_lr > 0.0) || !std::isfinite(initial_lr))
    ThrowValidation("GanTrainConfig: learning rate must be positive, got ", initial_lr);
  if (batch == 0) ThrowValidation("GanTrainConfig: batch must be positive");
  if (crop_frames < 16)
    ThrowValidation("GanTrainConfig: crop_frames ", crop_frames,
                    " is below 16, the discriminator's minimum time extent");
  if (halving_interval == 0) ThrowValidation("GanTrainConfig: halving interval must be positive");
  if (!(holdout_fraction >= 0.0 && holdout_fraction < 1.0))
    ThrowValidation("GanTrainConfig: holdout fraction must be in [0, 1), got ",
                    holdout_fraction);
}

double LearningRateAt(double initial_lr, std::uint64_t iter, std::uint64_t halving_interval) {
  return std::ldexp(initial_lr, -static_cast<int>(std::min<std::uint64_t>(
                                    iter / halving_interval, 2000)));
}

PairSplit SplitPairs(std::size_t num_pairs, double holdout_fraction, std::uint64_t seed) {
  std::vector<std::size_t> idx(num_pairs);
  for (std::size_t i = 0; i < num_pairs; ++i) idx[i] = i;
  RandomStream rng(seed ^ 0x5851f42d4c957f2dull);
  rng.Shuffle(&idx);
  std::size_t n_hold = static_cast<std::size_t>(std::llround(num_pairs * holdout_fraction));
  if (holdout_fraction > 0.0 && num_pairs >= 2) n_hold = std::max<std::size_t>(n_hold, 1);
  if (num_pairs > 0) n_hold = std::min(n_hold, num_pairs - 1);
  PairSplit s;
  s.heldout.assign(idx.begin(), idx.begin() + n_hold);
  s.train.assign(idx.begin() + n_hold, idx.end());
  std::sort(s.heldout.begin(), s.heldout.end());
  std::sort(s.train.begin(), s.train.end());
  return s;
}

double FbankL2(const FbankMatrix &a, const FbankMatrix &b) {
  if (a.num_frames != b.num_frames || a.num_bins != b.num_bins)
    ThrowValidation("FbankL2: shape ", a.num_frames, "x", a.num_bins, " vs ",
                    b.num_frames, "x", b.num_bins);
  if (a.values.empty()) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(a.values.size()));
}

Tensor4 FbankToTensor(const FbankMatrix &mat) {
  Tensor4 t(Shape4{1, 1, mat.num_bins, mat.num_frames});
  for (std::size_t f = 0; f < mat.num_bins; ++f)
    for (std::size_t tt = 0; tt < mat.num_frames; ++tt) t.at(0, 0, f, tt) = mat.at(tt, f);
  return t;
}

FbankMatrix TensorToFbank(const Tensor4 &t, std::size_t item) {
  const Shape4 &s = t.shape();
  if (s.c != 1 || item >= s.n)
    ThrowValidation("TensorToFbank: cannot take item ", item, " of ", s.ToString());
  FbankMatrix m(s.w, s.h);
  for (std::size_t f = 0; f < s.h; ++f)
    for (std::size_t tt = 0; tt < s.w; ++tt) m.at(tt, f) = t.at(item, 0, f, tt);
  return m;
}

FbankMatrix RunGenerator(const Generator &g, const FbankMatrix &input) {
  FbankMatrix out = TensorToFbank(g.Forward(FbankToTensor(input)));
  out.frame_shift_sec = input.frame_shift_sec;
  out.speaker_id = input.speaker_id;
  out.utterance_id = input.utterance_id;
  return out;
}

double MeanHeldoutL2(const Generator *g, std::span<const TrainingPair> pairs,
                     std::span<const std::size_t> indices) {
  if (indices.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (std::size_t i : indices) {
    const TrainingPair &p = pairs[i];
    sum += g ? FbankL2(RunGenerator(*g, p.control_fbank), p.target_fbank)
             : FbankL2(p.control_fbank, p.target_fbank);
  }
  return sum / static_cast<double>(indices.size());
}

namespace {

std::size_t Reflect(long i, std::size_t len) {
  if (len == 1) return 0;
  const long period = 2 * static_cast<long>(len - 1);
  long m = i % period;
  if (m < 0) m += period;
  return static_cast<std::size_t>(m < static_cast<long>(len) ? m : period - m);
}

// Copies an aligned crop of both sides into batch slot b.
void FillCrop(const TrainingPair &p, std::size_t crop, RandomStream *rng,
              std::size_t b, Tensor4 *ctl, Tensor4 *tgt) {
  const std::size_t len = p.control_fbank.num_frames;
  const std::size_t bins = p.control_fbank.num_bins;
  const std::size_t start = len > crop ? rng->Index(len - crop + 1) : 0;
  for (std::size_t t = 0; t < crop; ++t) {
    const std::size_t src = len >= crop ? start + t : Reflect(static_cast<long>(t), len);
    for (std::size_t f = 0; f < bins; ++f) {
      ctl->at(b, 0, f, t) = p.control_fbank.at(src, f);
      tgt->at(b, 0, f, t) = p.target_fbank.at(src, f);
    }
  }
}

bool AllFinite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

GanCheckpoint TrainSpeakerGan(std::span<const TrainingPair> pairs,
                              const std::string &target_speaker_id,
                              const GanTrainConfig &config,
                              const MetricsCallback &on_metrics) {
  config.Validate();
  if (pairs.empty()) ThrowValidation("TrainSpeakerGan: no training pairs");
  for (const TrainingPair &p : pairs) {
    if (p.control_fbank.num_frames != p.target_fbank.num_frames ||
        p.control_fbank.num_bins != p.target_fbank.num_bins || p.control_fbank.num_frames == 0)
      ThrowValidation("TrainSpeakerGan: pair ", p.control_utt, "/", p.target_utt,
                      " has mismatched or empty shapes");
    if (p.control_fbank.num_bins != kNumMelBins)
      ThrowValidation("TrainSpeakerGan: pair ", p.control_utt, " has ",
                      p.control_fbank.num_bins, " bins, expected ", kNumMelBins);
  }

  RandomStream rng(config.seed);
  GanCheckpoint cp = GanCheckpoint::Fresh(target_speaker_id, config.crop_frames, &rng,
                                          config.initial_lr);
  QuantizeToFloat(&cp);
  const PairSplit split = SplitPairs(pairs.size(), config.holdout_fraction, config.seed);

  Generator &gen = cp.generator;
  Discriminator &disc = cp.discriminator;
  std::vector<Parameter *> g_params = gen.Parameters();
  std::vector<Parameter *> d_params = disc.Parameters();
  const Shape4 shape{config.batch, 1, kNumMelBins, config.crop_frames};
  Tensor4 ctl(shape), tgt(shape);
  Generator::Cache g_cache;
  Discriminator::Cache real_cache, fake_cache;
  GanCheckpoint last_finite = cp;

  for (std::uint64_t it = 0; it < config.total_iters; ++it) {
    const double lr = LearningRateAt(config.initial_lr, it, config.halving_interval);
    for (std::size_t b = 0; b < config.batch; ++b)
      FillCrop(pairs[split.train[rng.Index(split.train.size())]], config.crop_frames, &rng,
               b, &ctl, &tgt);

    // Discriminator step: real = target crop, fake = G(control crop).
    const Tensor4 fake = gen.Forward(ctl, &g_cache);
    disc.ZeroGrad();
    const std::vector<double> d_real = disc.Forward(tgt, &real_cache);
    const std::vector<double> d_fake = disc.Forward(fake, &fake_cache);
    const DiscriminatorLoss dl = DiscriminatorBce(d_real, d_fake);

    // Generator step against the updated discriminator; G is unchanged, so
    // its forward cache is reused.
    LossAndGrad gl;
    if (std::isfinite(dl.loss)) {
      disc.Backward(real_cache, dl.grad_real, true, false);
      disc.Backward(fake_cache, dl.grad_fake, true, false);
      AdamStep(d_params, &cp.adam_d, lr);
      gen.ZeroGrad();
      const std::vector<double> d_fake2 = disc.Forward(fake, &fake_cache);
      gl = GeneratorBce(d_fake2, config.g_loss);
      if (std::isfinite(gl.loss)) {
        const Tensor4 gx = disc.Backward(fake_cache, gl.grad, false, true);
        gen.Backward(g_cache, gx, false);
        AdamStep(g_params, &cp.adam_g, lr);
      }
    }
    bool finite = std::isfinite(dl.loss) && std::isfinite(gl.loss);
    for (const Parameter *p : g_params) finite = finite && AllFinite(p->value);
    for (const Parameter *p : d_params) finite = finite && AllFinite(p->value);
    if (!finite)
      throw TrainingDiverged(StrCat("TrainSpeakerGan: non-finite loss or weights at iteration ",
                                    it, " (loss_D=", dl.loss, ", loss_G=", gl.loss, ")"),
                             std::move(last_finite));

    cp.iteration = it + 1;
    cp.lr_current = LearningRateAt(config.initial_lr, cp.iteration, config.halving_interval);
    last_finite = cp;
    if (on_metrics && config.log_every > 0 &&
        (cp.iteration % config.log_every == 0 || cp.iteration == config.total_iters)) {
      GanMetrics m;
      m.iteration = cp.iteration;
      m.loss_d = dl.loss;
      m.loss_g = gl.loss;
      m.heldout_l2 = MeanHeldoutL2(&gen, pairs, split.heldout);
      m.lr = lr;
      on_metrics(m);
    }
  }
  QuantizeToFloat(&cp);
  return cp;
}

}  // namespace dysaug
