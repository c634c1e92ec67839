// features/norm-stats.cc

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

#include "dysaug/features/norm-stats.h"

#include <algorithm>
#include <cmath>

#include "dysaug/base/errors.h"

namespace dysaug {

void NormAccumulator::CheckSpeaker(const std::string &id) {
  if (speaker_id_.empty()) {
    speaker_id_ = id;
  } else if (id != speaker_id_) {
    ThrowValidation("NormAccumulator: speaker '", id,
                    "' mixed into statistics for '", speaker_id_, "'");
  }
}

void NormAccumulator::EnsureDim(std::size_t dim) {
  if (mean_.empty()) {
    mean_.assign(dim, 0.0);
    m2_.assign(dim, 0.0);
  } else if (mean_.size() != dim) {
    ThrowValidation("NormAccumulator: dimension ", dim, " does not match ",
                    mean_.size());
  }
}

void NormAccumulator::Add(const FbankMatrix &mat) {
  CheckSpeaker(mat.speaker_id);
  if (mat.num_frames == 0) return;
  EnsureDim(mat.num_bins);
  for (std::size_t t = 0; t < mat.num_frames; ++t) {
    ++count_;
    const double n = static_cast<double>(count_);
    for (std::size_t f = 0; f < mat.num_bins; ++f) {
      const double x = mat.at(t, f);
      const double delta = x - mean_[f];
      mean_[f] += delta / n;
      m2_[f] += delta * (x - mean_[f]);
    }
  }
}

void NormAccumulator::Merge(const NormAccumulator &other) {
  if (other.count_ == 0) return;
  CheckSpeaker(other.speaker_id_);
  if (count_ == 0) {
    count_ = other.count_;
    mean_ = other.mean_;
    m2_ = other.m2_;
    return;
  }
  EnsureDim(other.mean_.size());
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  for (std::size_t f = 0; f < mean_.size(); ++f) {
    const double delta = other.mean_[f] - mean_[f];
    mean_[f] += delta * nb / n;
    m2_[f] += other.m2_[f] + delta * delta * na * nb / n;
  }
  count_ += other.count_;
}

SpeakerNormStats NormAccumulator::Finalize(double std_floor) const {
  if (count_ < 2)
    ThrowValidation("NormAccumulator: speaker '", speaker_id_, "' has ", count_,
                    " frame(s); need at least 2");
  SpeakerNormStats s;
  s.speaker_id = speaker_id_;
  s.mean = mean_;
  s.std.resize(mean_.size());
  for (std::size_t f = 0; f < mean_.size(); ++f)
    s.std[f] = std::max(std::sqrt(m2_[f] / static_cast<double>(count_)), std_floor);
  s.frame_count = count_;
  return s;
}

SpeakerNormStats AccumulateNormStats(std::span<const FbankMatrix> mats,
                                     double std_floor) {
  NormAccumulator acc;
  for (const FbankMatrix &m : mats) acc.Add(m);
  return acc.Finalize(std_floor);
}

namespace {

void CheckCompatible(const FbankMatrix &mat, const SpeakerNormStats &stats,
                     const char *what) {
  if (mat.speaker_id != stats.speaker_id)
    ThrowValidation(what, ": matrix speaker '", mat.speaker_id,
                    "' does not match statistics speaker '", stats.speaker_id, "'");
  if (mat.num_bins != stats.mean.size())
    ThrowValidation(what, ": matrix has ", mat.num_bins,
                    " bins, statistics have ", stats.mean.size());
}

}  // namespace

FbankMatrix Normalize(const FbankMatrix &mat, const SpeakerNormStats &stats) {
  CheckCompatible(mat, stats, "Normalize");
  FbankMatrix out = mat;
  for (std::size_t t = 0; t < mat.num_frames; ++t)
    for (std::size_t f = 0; f < mat.num_bins; ++f)
      out.at(t, f) = (mat.at(t, f) - stats.mean[f]) / stats.std[f];
  return out;
}

FbankMatrix Denormalize(const FbankMatrix &mat, const SpeakerNormStats &stats) {
  CheckCompatible(mat, stats, "Denormalize");
  FbankMatrix out = mat;
  for (std::size_t t = 0; t < mat.num_frames; ++t)
    for (std::size_t f = 0; f < mat.num_bins; ++f)
      out.at(t, f) = mat.at(t, f) * stats.std[f] + stats.mean[f];
  return out;
}

}  // namespace dysaug
