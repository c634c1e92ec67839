// features/norm-stats.h

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

#ifndef DYSAUG_FEATURES_NORM_STATS_H_
#define DYSAUG_FEATURES_NORM_STATS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dysaug/features/fbank.h"

namespace dysaug {

inline constexpr double kStdFloor = 1e-5;

struct SpeakerNormStats {
  std::string speaker_id;
  std::vector<double> mean;
  std::vector<double> std;
  std::size_t frame_count = 0;
};

// Streaming per-dimension mean / population variance (Welford updates,
// Chan et al. pairwise merge).  Partial accumulators built over disjoint
// utterance sets may be merged in any grouping.
class NormAccumulator {
 public:
  explicit NormAccumulator(std::string speaker_id = {})
      : speaker_id_(std::move(speaker_id)) {}

  // Rejects a matrix whose speaker differs from the accumulator's (an empty
  // accumulator speaker adopts the first matrix's).
  void Add(const FbankMatrix &mat);
  void Merge(const NormAccumulator &other);

  std::size_t count() const { return count_; }
  const std::string &speaker_id() const { return speaker_id_; }

  // Requires at least two frames.
  SpeakerNormStats Finalize(double std_floor = kStdFloor) const;

 private:
  void CheckSpeaker(const std::string &id);
  void EnsureDim(std::size_t dim);

  std::string speaker_id_;
  std::size_t count_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

SpeakerNormStats AccumulateNormStats(std::span<const FbankMatrix> mats,
                                     double std_floor = kStdFloor);

// (x - mean) / std per dimension, and its inverse.  Both reject a speaker or
// dimension mismatch.
FbankMatrix Normalize(const FbankMatrix &mat, const SpeakerNormStats &stats);
FbankMatrix Denormalize(const FbankMatrix &mat, const SpeakerNormStats &stats);

}  // namespace dysaug

#endif  // DYSAUG_FEATURES_NORM_STATS_H_
