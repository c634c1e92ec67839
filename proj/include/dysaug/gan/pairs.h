// gan/pairs.h

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

#ifndef DYSAUG_GAN_PAIRS_H_
#define DYSAUG_GAN_PAIRS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/dsp/audio.h"
#include "dysaug/features/fbank.h"
#include "dysaug/features/norm-stats.h"

namespace dysaug {

enum class PerturbMode { kTempo, kSpeed };

std::string_view PerturbModeName(PerturbMode mode);
PerturbMode ParsePerturbMode(std::string_view name);  // "tempo" | "speed"

// Tempo (WSOLA) or speed (resampling) perturbation by `factor`; the output
// is len / factor samples long either way.
AudioClip ApplyPerturbation(const AudioClip &clip, double factor, PerturbMode mode);

struct CorpusUtterance {
  AudioClip clip;  // speaker_id and utterance_id are taken from here
  std::string word_id;
};

struct TrainingPair {
  FbankMatrix control_fbank;  // perturbed, trimmed, normalized
  FbankMatrix target_fbank;   // trimmed, normalized
  std::string word_id;
  std::string control_utt;
  std::string target_utt;
  double factor = 1.0;
};

struct PairBuildOptions {
  PerturbMode mode = PerturbMode::kTempo;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_pairs_per_word = 32;
  FbankOptions fbank;
};

struct PairSet {
  std::vector<TrainingPair> pairs;
  // Per control speaker, over that speaker's perturbed untrimmed matrices.
  std::map<std::string, SpeakerNormStats> control_stats;
  SpeakerNormStats target_stats;
  std::size_t words_without_match = 0;
  std::size_t pairs_out_of_range = 0;  // match factor outside the guard band
};

// Same-word cross product of control and target utterances (capped per word
// by seeded subsampling), each control perturbed to the target's frame
// count, both trimmed to the shorter length and speaker-normalized.  The
// target side must hold a single speaker.  Rejects an empty result.
PairSet BuildPairs(std::span<const CorpusUtterance> control,
                   std::span<const CorpusUtterance> target,
                   const PairBuildOptions &opts);

}  // namespace dysaug

#endif  // DYSAUG_GAN_PAIRS_H_
