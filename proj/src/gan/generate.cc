// gan/generate.cc

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

#include "dysaug/gan/generate.h"

#include "dysaug/base/errors.h"
#include "dysaug/gan/trainer.h"

namespace dysaug {

FbankMatrix GenerateRaw(const GanCheckpoint &cp, const FbankMatrix &input,
                        const SpeakerNormStats &source_stats) {
  if (input.num_bins != kNumMelBins)
    ThrowValidation("generate: '", input.utterance_id, "' has ", input.num_bins,
                    " bins, the generator expects ", kNumMelBins);
  if (input.num_frames == 0)
    ThrowValidation("generate: '", input.utterance_id, "' has no frames");
  return RunGenerator(cp.generator, Normalize(input, source_stats));
}

std::vector<FbankMatrix> GenerateSet(const GanCheckpoint &cp,
                                     std::span<const FbankMatrix> inputs,
                                     std::span<const SpeakerNormStats> source_stats,
                                     OutputNorm norm) {
  std::vector<FbankMatrix> out;
  out.reserve(inputs.size());
  for (const FbankMatrix &in : inputs) {
    const SpeakerNormStats *stats = nullptr;
    for (const SpeakerNormStats &s : source_stats)
      if (s.speaker_id == in.speaker_id) stats = &s;
    if (!stats)
      ThrowValidation("generate: no normalization statistics for speaker '",
                      in.speaker_id, "'");
    out.push_back(GenerateRaw(cp, in, *stats));
  }
  if (norm == OutputNorm::kTargetSpace || out.empty()) return out;

  // Pooled statistics ignore speaker labels, which differ across sources.
  NormAccumulator acc("augmented");
  for (FbankMatrix m : out) {
    m.speaker_id = "augmented";
    acc.Add(m);
  }
  if (acc.count() < 2) return out;
  const SpeakerNormStats pooled = acc.Finalize();
  for (FbankMatrix &m : out) {
    const std::string spk = m.speaker_id;
    m.speaker_id = "augmented";
    m = Normalize(m, pooled);
    m.speaker_id = spk;
  }
  return out;
}

}  // namespace dysaug
