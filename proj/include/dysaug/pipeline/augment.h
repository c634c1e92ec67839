// pipeline/augment.h

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

#ifndef DYSAUG_PIPELINE_AUGMENT_H_
#define DYSAUG_PIPELINE_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/gan/pairs.h"
#include "dysaug/pipeline/manifest.h"

namespace dysaug {

enum class AugmentMode { kTempo, kTempoGan, kSpeed, kSpeedGan };

std::string_view AugmentModeName(AugmentMode mode);
AugmentMode ParseAugmentMode(std::string_view name);  // tempo|tempo_gan|speed|speed_gan
bool IsGanMode(AugmentMode mode);
PerturbMode BaseMode(AugmentMode mode);

// Copy k of a plan with multiplicity m uses sd_factor * global_factors[k].
inline const std::vector<double> kDefaultGlobalFactors = {1.0, 0.9, 1.1};

struct AugmentationPlan {
  std::string target_speaker_id;
  AugmentMode mode = AugmentMode::kTempo;
  double sd_factor = 1.0;
  std::size_t multiplicity = 1;
  std::vector<double> global_factors;  // empty: first `multiplicity` defaults
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t seed = kDefaultSeed;

  std::vector<double> CopyFactors() const;  // validated, one per copy
  void Validate() const;
};

// Relative paths in the plan resolve against base_dir.
AugmentationPlan ParsePlan(std::string_view json_text, const std::string &name,
                           const std::filesystem::path &base_dir);
AugmentationPlan ReadPlan(const std::filesystem::path &path);
std::string FormatPlan(const AugmentationPlan &plan);

struct Provenance {
  std::string mode;
  double factor = 1.0;
  std::string checkpoint_id;  // empty for non-GAN modes

  bool operator==(const Provenance &) const = default;
};

struct AugmentedEntry {
  std::string utterance_id;
  std::string source_utterance_id;
  std::string speaker_id;
  std::string word_id;
  std::string feature_path;  // relative to the output manifest
  Provenance provenance;

  bool operator==(const AugmentedEntry &) const = default;
};

std::string FormatAugmentedManifest(std::span<const AugmentedEntry> entries);
std::vector<AugmentedEntry> ParseAugmentedManifest(std::string_view text,
                                                   const std::string &name);

inline constexpr std::string_view kAugmentedManifestName = "augmented.jsonl";

// Perturbs every control utterance of `m` by each copy factor, extracts
// FBank, passes it through the target speaker's generator for GAN modes,
// and writes <output_dir>/feats/*.fbk plus <output_dir>/augmented.jsonl
// sorted by utterance id.  A GAN mode without a readable checkpoint for the
// target speaker is rejected before any work.
std::vector<AugmentedEntry> RunAugmentation(const Manifest &m, const AugmentationPlan &plan);

}  // namespace dysaug

#endif  // DYSAUG_PIPELINE_AUGMENT_H_
