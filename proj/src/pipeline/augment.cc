// pipeline/augment.cc

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

#include "dysaug/pipeline/augment.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>

#include "json.hpp"

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"
#include "dysaug/dsp/resample.h"
#include "dysaug/features/feature-io.h"
#include "dysaug/gan/checkpoint.h"
#include "dysaug/gan/generate.h"
#include "dysaug/pipeline/corpus.h"

namespace dysaug {

using nlohmann::json;

std::string_view AugmentModeName(AugmentMode mode) {
  switch (mode) {
    case AugmentMode::kTempo: return "tempo";
    case AugmentMode::kTempoGan: return "tempo_gan";
    case AugmentMode::kSpeed: return "speed";
    case AugmentMode::kSpeedGan: return "speed_gan";
  }
  return "?";
}

AugmentMode ParseAugmentMode(std::string_view name) {
  for (AugmentMode m : {AugmentMode::kTempo, AugmentMode::kTempoGan, AugmentMode::kSpeed,
                        AugmentMode::kSpeedGan})
    if (name == AugmentModeName(m)) return m;
  ThrowValidation("unknown augmentation mode '", name,
                  "' (expected tempo, tempo_gan, speed or speed_gan)");
}

bool IsGanMode(AugmentMode mode) {
  return mode == AugmentMode::kTempoGan || mode == AugmentMode::kSpeedGan;
}

PerturbMode BaseMode(AugmentMode mode) {
  return (mode == AugmentMode::kTempo || mode == AugmentMode::kTempoGan) ? PerturbMode::kTempo
                                                                         : PerturbMode::kSpeed;
}

std::vector<double> AugmentationPlan::CopyFactors() const {
  std::vector<double> globals = global_factors;
  if (globals.empty()) {
    if (multiplicity > kDefaultGlobalFactors.size())
      ThrowValidation("plan: multiplicity ", multiplicity, " needs explicit global_factors (",
                      kDefaultGlobalFactors.size(), " defaults)");
    globals.assign(kDefaultGlobalFactors.begin(),
                   kDefaultGlobalFactors.begin() + static_cast<long>(multiplicity));
  }
  if (globals.size() != multiplicity)
    ThrowValidation("plan: ", globals.size(), " global factors for multiplicity ", multiplicity);
  std::vector<double> out;
  for (double g : globals) {
    const double f = sd_factor * g;
    if (!(f >= kMinPerturbFactor && f <= kMaxPerturbFactor))
      ThrowValidation("plan: factor ", sd_factor, " x ", g, " = ", f, " is outside [",
                      kMinPerturbFactor, ", ", kMaxPerturbFactor, "]");
    out.push_back(f);
  }
  return out;
}

void AugmentationPlan::Validate() const {
  if (target_speaker_id.empty()) ThrowValidation("plan: target_speaker_id is empty");
  if (multiplicity == 0) ThrowValidation("plan: multiplicity must be positive");
  if (output_dir.empty()) ThrowValidation("plan: output_dir is empty");
  if (!std::isfinite(sd_factor) || sd_factor <= 0.0)
    ThrowValidation("plan: sd_factor must be positive, got ", sd_factor);
  CopyFactors();
  if (IsGanMode(mode) && !checkpoint)
    ThrowValidation("plan: mode ", AugmentModeName(mode), " requires a checkpoint for '",
                    target_speaker_id, "'");
}

AugmentationPlan ParsePlan(std::string_view json_text, const std::string &name,
                           const std::filesystem::path &base_dir) {
  AugmentationPlan p;
  try {
    const json j = json::parse(json_text);
    p.target_speaker_id = j.at("target_speaker_id").get<std::string>();
    p.mode = ParseAugmentMode(j.at("mode").get<std::string>());
    p.sd_factor = j.at("sd_factor").get<double>();
    p.multiplicity = j.value("multiplicity", std::size_t{1});
    if (j.contains("global_factors")) p.global_factors = j["global_factors"].get<std::vector<double>>();
    std::filesystem::path out = j.at("output_dir").get<std::string>();
    p.output_dir = out.is_absolute() ? out : base_dir / out;
    if (j.contains("checkpoint") && !j["checkpoint"].is_null()) {
      std::filesystem::path cp = j["checkpoint"].get<std::string>();
      p.checkpoint = cp.is_absolute() ? cp : base_dir / cp;
    }
    p.seed = j.value("seed", kDefaultSeed);
  } catch (const json::exception &e) {
    ThrowValidation(name, ": malformed augmentation plan (", e.what(), ")");
  }
  p.Validate();
  return p;
}

AugmentationPlan ReadPlan(const std::filesystem::path &path) {
  return ParsePlan(ReadFileBytes(path), path.string(), path.parent_path());
}

std::string FormatPlan(const AugmentationPlan &plan) {
  nlohmann::ordered_json j;
  j["target_speaker_id"] = plan.target_speaker_id;
  j["mode"] = std::string(AugmentModeName(plan.mode));
  j["sd_factor"] = plan.sd_factor;
  j["multiplicity"] = plan.multiplicity;
  if (!plan.global_factors.empty()) j["global_factors"] = plan.global_factors;
  j["output_dir"] = plan.output_dir.string();
  if (plan.checkpoint) j["checkpoint"] = plan.checkpoint->string();
  j["seed"] = plan.seed;
  return j.dump(2) + "\n";
}

std::string FormatAugmentedManifest(std::span<const AugmentedEntry> entries) {
  std::string out;
  for (const AugmentedEntry &e : entries) {
    nlohmann::ordered_json j;
    j["utterance_id"] = e.utterance_id;
    j["source_utterance_id"] = e.source_utterance_id;
    j["speaker_id"] = e.speaker_id;
    j["word_id"] = e.word_id;
    j["feature_path"] = e.feature_path;
    j["provenance"] = {{"mode", e.provenance.mode},
                       {"factor", e.provenance.factor},
                       {"checkpoint_id", e.provenance.checkpoint_id}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<AugmentedEntry> ParseAugmentedManifest(std::string_view text,
                                                   const std::string &name) {
  std::vector<AugmentedEntry> out;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const json j = json::parse(line);
      AugmentedEntry e;
      e.utterance_id = j.at("utterance_id").get<std::string>();
      e.source_utterance_id = j.at("source_utterance_id").get<std::string>();
      e.speaker_id = j.at("speaker_id").get<std::string>();
      e.word_id = j.at("word_id").get<std::string>();
      e.feature_path = j.at("feature_path").get<std::string>();
      const json &p = j.at("provenance");
      e.provenance.mode = p.at("mode").get<std::string>();
      e.provenance.factor = p.at("factor").get<double>();
      e.provenance.checkpoint_id = p.at("checkpoint_id").get<std::string>();
      out.push_back(std::move(e));
    } catch (const json::exception &e) {
      ThrowValidation(name, ":", line_no, ": malformed entry (", e.what(), ")");
    }
  }
  return out;
}

std::vector<AugmentedEntry> RunAugmentation(const Manifest &m, const AugmentationPlan &plan) {
  plan.Validate();
  const std::vector<double> factors = plan.CopyFactors();

  // Everything that can be rejected is checked before any output is written.
  std::optional<GanCheckpoint> cp;
  std::string cp_id;
  if (IsGanMode(plan.mode)) {
    if (!std::filesystem::exists(*plan.checkpoint))
      ThrowValidation("augment: checkpoint '", plan.checkpoint->string(),
                      "' for mode ", AugmentModeName(plan.mode), " does not exist");
    cp = ReadCheckpoint(plan.checkpoint->string());
    if (cp->target_speaker_id != plan.target_speaker_id)
      ThrowValidation("augment: checkpoint '", plan.checkpoint->string(), "' belongs to '",
                      cp->target_speaker_id, "', the plan targets '", plan.target_speaker_id,
                      "'");
    cp_id = CheckpointId(*cp);
  }
  const std::vector<const ManifestEntry *> controls = m.WithRole(SpeakerRole::kControl);
  if (controls.empty()) ThrowValidation("augment: manifest has no control utterances");

  const auto alignments = LoadAlignments(m);
  const std::vector<CorpusUtterance> utts = LoadUtterances(m, controls, alignments);

  struct Job {
    std::size_t utt;
    std::size_t copy;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < factors.size(); ++c)
    for (std::size_t u = 0; u < utts.size(); ++u) jobs.push_back({u, c});

  const PerturbMode base = BaseMode(plan.mode);
  std::vector<FbankMatrix> feats(jobs.size());
  std::exception_ptr error;
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      const Job &j = jobs[i];
      feats[i] = ExtractFbank(ApplyPerturbation(utts[j.utt].clip, factors[j.copy], base));
    } catch (...) {
#pragma omp critical(dysaug_augment_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  if (cp) {
    std::map<std::string, NormAccumulator> acc;
    for (const FbankMatrix &f : feats) acc.try_emplace(f.speaker_id, f.speaker_id).first->second.Add(f);
    std::vector<SpeakerNormStats> stats;
    for (auto &kv : acc) stats.push_back(kv.second.Finalize());
    feats = GenerateSet(*cp, feats, stats, OutputNorm::kFreshStats);
  }

  const std::string mode_name(AugmentModeName(plan.mode));
  std::vector<AugmentedEntry> entries(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job &j = jobs[i];
    const ManifestEntry &src = *controls[j.utt];
    AugmentedEntry &e = entries[i];
    e.utterance_id = StrCat(src.utterance_id, "-", mode_name, "-", j.copy + 1);
    e.source_utterance_id = src.utterance_id;
    e.speaker_id = src.speaker_id;
    e.word_id = src.word_id;
    e.feature_path = StrCat("feats/", e.utterance_id, ".fbk");
    e.provenance = {mode_name, factors[j.copy], cp_id};
    feats[i].utterance_id = e.utterance_id;
  }

  const long ne = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < ne; ++i) {
    try {
      WriteFbank(plan.output_dir / entries[i].feature_path, feats[i]);
    } catch (...) {
#pragma omp critical(dysaug_augment_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::sort(entries.begin(), entries.end(),
            [](const AugmentedEntry &a, const AugmentedEntry &b) {
              return a.utterance_id < b.utterance_id;
            });
  WriteFileBytes(plan.output_dir / kAugmentedManifestName, FormatAugmentedManifest(entries));
  return entries;
}

}  // namespace dysaug
