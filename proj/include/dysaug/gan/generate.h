// gan/generate.h

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

#ifndef DYSAUG_GAN_GENERATE_H_
#define DYSAUG_GAN_GENERATE_H_

#include <span>
#include <vector>

#include "dysaug/features/fbank.h"
#include "dysaug/features/norm-stats.h"
#include "dysaug/gan/checkpoint.h"

namespace dysaug {

enum class OutputNorm {
  kFreshStats,   // renormalize with statistics pooled over the output set
  kTargetSpace,  // leave the generator output in target-normalized space
};

// Normalizes `input` with source_stats and runs the generator full-length.
// Rejects F != 40.
FbankMatrix GenerateRaw(const GanCheckpoint &cp, const FbankMatrix &input,
                        const SpeakerNormStats &source_stats);

// Generator output for a whole augmented set, optionally renormalized to
// zero mean / unit variance with statistics computed over that set.  Each
// input is normalized with the stats of its own speaker_id.
std::vector<FbankMatrix> GenerateSet(const GanCheckpoint &cp,
                                     std::span<const FbankMatrix> inputs,
                                     std::span<const SpeakerNormStats> source_stats,
                                     OutputNorm norm = OutputNorm::kFreshStats);

}  // namespace dysaug

#endif  // DYSAUG_GAN_GENERATE_H_
