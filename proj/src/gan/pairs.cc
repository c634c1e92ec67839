// gan/pairs.cc

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

#include "dysaug/gan/pairs.h"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include "dysaug/base/errors.h"
#include "dysaug/dsp/resample.h"
#include "dysaug/perturb/duration-stats.h"
#include "dysaug/perturb/speed.h"
#include "dysaug/perturb/wsola.h"

namespace dysaug {

std::string_view PerturbModeName(PerturbMode mode) {
  return mode == PerturbMode::kTempo ? "tempo" : "speed";
}

PerturbMode ParsePerturbMode(std::string_view name) {
  if (name == "tempo") return PerturbMode::kTempo;
  if (name == "speed") return PerturbMode::kSpeed;
  ThrowValidation("unknown perturbation mode '", name, "' (expected tempo or speed)");
}

AudioClip ApplyPerturbation(const AudioClip &clip, double factor, PerturbMode mode) {
  return mode == PerturbMode::kTempo ? TempoPerturb(clip, factor)
                                     : SpeedPerturb(clip, factor);
}

namespace {

struct PairJob {
  std::size_t control = 0;
  std::size_t target = 0;
  double factor = 1.0;
};

}  // namespace

PairSet BuildPairs(std::span<const CorpusUtterance> control,
                   std::span<const CorpusUtterance> target,
                   const PairBuildOptions &opts) {
  if (control.empty() || target.empty())
    ThrowValidation("BuildPairs: need utterances on both sides (control=",
                    control.size(), ", target=", target.size(), ")");
  const std::string &target_speaker = target[0].clip.speaker_id;
  for (const CorpusUtterance &u : target)
    if (u.clip.speaker_id != target_speaker)
      ThrowValidation("BuildPairs: target side mixes speakers '", target_speaker,
                      "' and '", u.clip.speaker_id, "'");

  std::map<std::string, std::vector<std::size_t>> ctl_by_word, tgt_by_word;
  for (std::size_t i = 0; i < control.size(); ++i) ctl_by_word[control[i].word_id].push_back(i);
  for (std::size_t i = 0; i < target.size(); ++i) tgt_by_word[target[i].word_id].push_back(i);

  PairSet out;
  std::set<std::string> words;
  for (const auto &kv : ctl_by_word) words.insert(kv.first);
  for (const auto &kv : tgt_by_word) words.insert(kv.first);

  auto frames_of = [&](const AudioClip &clip) {
    return NumFrames(clip.samples.size(), GetFrameGeometry(opts.fbank, clip.sample_rate_hz));
  };

  RandomStream rng(opts.seed);
  std::vector<PairJob> jobs;
  for (const std::string &w : words) {
    auto c = ctl_by_word.find(w);
    auto t = tgt_by_word.find(w);
    if (c == ctl_by_word.end() || t == tgt_by_word.end()) {
      ++out.words_without_match;
      continue;
    }
    std::vector<PairJob> word_jobs;
    for (std::size_t ci : c->second)
      for (std::size_t ti : t->second) word_jobs.push_back({ci, ti, 1.0});
    if (word_jobs.size() > opts.max_pairs_per_word) {
      rng.Shuffle(&word_jobs);
      word_jobs.resize(opts.max_pairs_per_word);
      std::sort(word_jobs.begin(), word_jobs.end(), [](const PairJob &a, const PairJob &b) {
        return a.control != b.control ? a.control < b.control : a.target < b.target;
      });
    }
    for (PairJob &j : word_jobs) {
      const std::size_t cf = frames_of(control[j.control].clip);
      const std::size_t tf = frames_of(target[j.target].clip);
      if (cf == 0 || tf == 0) {
        ++out.pairs_out_of_range;
        continue;
      }
      j.factor = PairwiseMatchFactor(cf, tf);
      if (j.factor < kMinPerturbFactor || j.factor > kMaxPerturbFactor) {
        ++out.pairs_out_of_range;
        continue;
      }
      jobs.push_back(j);
    }
  }
  if (jobs.empty())
    ThrowValidation("BuildPairs: no usable pairs (", out.words_without_match,
                    " words without a cross-side match, ", out.pairs_out_of_range,
                    " pairs outside the factor range)");

  // Target features once per utterance.
  std::vector<std::size_t> target_used;
  for (const PairJob &j : jobs) target_used.push_back(j.target);
  std::sort(target_used.begin(), target_used.end());
  target_used.erase(std::unique(target_used.begin(), target_used.end()), target_used.end());
  std::vector<FbankMatrix> target_fbank(target.size());
  std::vector<FbankMatrix> control_fbank(jobs.size());

  std::exception_ptr error;
  const long n_target = static_cast<long>(target_used.size());
  const long n_jobs = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n_target + n_jobs; ++k) {
    try {
      if (k < n_target) {
        const std::size_t ti = target_used[k];
        target_fbank[ti] = ExtractFbank(target[ti].clip, opts.fbank);
      } else {
        const PairJob &j = jobs[k - n_target];
        AudioClip p = ApplyPerturbation(control[j.control].clip, j.factor, opts.mode);
        control_fbank[k - n_target] = ExtractFbank(p, opts.fbank);
      }
    } catch (...) {
#pragma omp critical(dysaug_pairs_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::map<std::string, NormAccumulator> ctl_acc;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const std::string &spk = control[jobs[k].control].clip.speaker_id;
    ctl_acc.try_emplace(spk, spk).first->second.Add(control_fbank[k]);
  }
  for (auto &kv : ctl_acc) out.control_stats[kv.first] = kv.second.Finalize();
  NormAccumulator tgt_acc(target_speaker);
  for (std::size_t ti : target_used) tgt_acc.Add(target_fbank[ti]);
  out.target_stats = tgt_acc.Finalize();

  out.pairs.reserve(jobs.size());
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const PairJob &j = jobs[k];
    const FbankMatrix &c = control_fbank[k];
    const FbankMatrix &t = target_fbank[j.target];
    const std::size_t len = std::min(c.num_frames, t.num_frames);
    TrainingPair p;
    p.control_fbank = Normalize(c.Frames(0, len), out.control_stats.at(c.speaker_id));
    p.target_fbank = Normalize(t.Frames(0, len), out.target_stats);
    p.word_id = control[j.control].word_id;
    p.control_utt = control[j.control].clip.utterance_id;
    p.target_utt = target[j.target].clip.utterance_id;
    p.factor = j.factor;
    out.pairs.push_back(std::move(p));
  }
  return out;
}

}  // namespace dysaug
