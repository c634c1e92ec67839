// gan/trainer.h

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

#ifndef DYSAUG_GAN_TRAINER_H_
#define DYSAUG_GAN_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dysaug/gan/checkpoint.h"
#include "dysaug/gan/pairs.h"
#include "dysaug/neural/losses.h"

namespace dysaug {

struct GanTrainConfig {
  double initial_lr = 2e-4;
  std::uint64_t total_iters = 10000;
  std::size_t batch = 8;
  std::uint32_t crop_frames = kDefaultCropFrames;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t halving_interval = 2500;
  GeneratorLossKind g_loss = GeneratorLossKind::kNonSaturating;
  double holdout_fraction = 0.1;
  std::uint64_t log_every = 100;

  void Validate() const;
};

// initial * 0.5^floor(iter / interval).
double LearningRateAt(double initial_lr, std::uint64_t iter,
                      std::uint64_t halving_interval = 2500);

struct PairSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> heldout;
};

// Seeded split; holds out round(n * fraction) pairs, at least one when n >= 2
// and fraction > 0, and always leaves at least one for training.
PairSplit SplitPairs(std::size_t num_pairs, double holdout_fraction, std::uint64_t seed);

// Root-mean-square difference over all cells; shapes must match.
double FbankL2(const FbankMatrix &a, const FbankMatrix &b);

// (1, 1, F, T) view of a T x F matrix, and back.
Tensor4 FbankToTensor(const FbankMatrix &mat);
FbankMatrix TensorToFbank(const Tensor4 &t, std::size_t item = 0);

// Full-length generator output for one matrix (speaker/utterance ids kept).
FbankMatrix RunGenerator(const Generator &g, const FbankMatrix &input);

// Mean over `indices` of FbankL2(G(control), target), or of
// FbankL2(control, target) when g is null (the identity baseline).
double MeanHeldoutL2(const Generator *g, std::span<const TrainingPair> pairs,
                     std::span<const std::size_t> indices);

struct GanMetrics {
  std::uint64_t iteration = 0;
  double loss_d = 0.0;
  double loss_g = 0.0;
  double heldout_l2 = 0.0;  // NaN when there is no held-out pair
  double lr = 0.0;
};

class TrainingDiverged : public std::runtime_error {
 public:
  TrainingDiverged(const std::string &what, GanCheckpoint last_finite)
      : std::runtime_error(what), last_finite_(std::move(last_finite)) {}
  const GanCheckpoint &last_finite() const { return last_finite_; }

 private:
  GanCheckpoint last_finite_;
};

using MetricsCallback = std::function<void(const GanMetrics &)>;

// Alternating discriminator / generator updates on random aligned crops.
// The returned checkpoint is float32-quantized so it behaves exactly like
// one reloaded from disk.  Throws TrainingDiverged on a non-finite loss.
GanCheckpoint TrainSpeakerGan(std::span<const TrainingPair> pairs,
                              const std::string &target_speaker_id,
                              const GanTrainConfig &config,
                              const MetricsCallback &on_metrics = nullptr);

}  // namespace dysaug

#endif  // DYSAUG_GAN_TRAINER_H_
