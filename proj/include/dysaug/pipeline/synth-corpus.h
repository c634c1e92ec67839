// pipeline/synth-corpus.h

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

#ifndef DYSAUG_PIPELINE_SYNTH_CORPUS_H_
#define DYSAUG_PIPELINE_SYNTH_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/pipeline/manifest.h"

namespace dysaug {

struct SynthCorpusOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t n_control = 2;
  std::size_t n_target = 2;
  std::size_t n_words = 10;
  std::size_t utts_per_word = 3;
  int sample_rate_hz = 16000;

  void Validate() const;
};

struct SynthControlTruth {
  std::string speaker_id;
  double duration_scale = 1.0;  // phone durations relative to the word template
};

// Ground-truth transform of a disordered speaker relative to the template.
struct SynthDisorderedTruth {
  std::string speaker_id;
  double stretch_alpha = 1.0;       // phone durations scaled by 1 / alpha
  double tilt_pole = 0.0;           // one-pole low-pass y = (1-a) x + a y[-1]
  double noise_low_hz = 0.0;        // band of the additive noise
  double noise_high_hz = 0.0;
  double noise_snr_db = 0.0;        // speech RMS over noise RMS
  double formant_bandwidth_hz = 0.0;
};

struct SynthTruth {
  std::uint64_t seed = kDefaultSeed;
  int sample_rate_hz = 16000;
  double control_formant_bandwidth_hz = 0.0;
  std::vector<SynthControlTruth> controls;
  std::vector<SynthDisorderedTruth> disordered;
};

// Stretch factors assigned to disordered speakers in order (cycled).
const std::vector<double> &SynthStretchFactors();

// Writes wav/<utt>.wav, align/<speaker>.tsv, manifest.jsonl and truth.json
// under out_dir and returns the manifest (paths relative to out_dir).
// Byte-identical output for the same options.
Manifest SynthesizeCorpus(const SynthCorpusOptions &opts,
                          const std::filesystem::path &out_dir);

std::string FormatTruth(const SynthTruth &t);
SynthTruth ParseTruth(const std::string &text, const std::string &name);
SynthTruth ReadTruth(const std::filesystem::path &path);

}  // namespace dysaug

#endif  // DYSAUG_PIPELINE_SYNTH_CORPUS_H_
