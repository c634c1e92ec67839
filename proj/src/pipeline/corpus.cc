// pipeline/corpus.cc

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

#include "dysaug/pipeline/corpus.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "dysaug/base/errors.h"
#include "dysaug/dsp/wav-io.h"

namespace dysaug {

std::map<std::string, AlignmentRecord> LoadAlignments(const Manifest &m) {
  std::map<std::string, std::map<std::string, AlignmentRecord>> by_file;
  std::map<std::string, AlignmentRecord> out;
  for (const ManifestEntry &e : m.entries) {
    if (!e.alignment_ref) continue;
    auto it = by_file.find(*e.alignment_ref);
    if (it == by_file.end()) {
      std::map<std::string, AlignmentRecord> recs;
      for (AlignmentRecord &r : ReadAlignments(m.Resolve(*e.alignment_ref)))
        recs[r.utterance_id] = std::move(r);
      it = by_file.emplace(*e.alignment_ref, std::move(recs)).first;
    }
    auto rec = it->second.find(e.utterance_id);
    if (rec == it->second.end())
      ThrowValidation("alignment file '", *e.alignment_ref, "' has no record for '",
                      e.utterance_id, "'");
    out[e.utterance_id] = rec->second;
  }
  return out;
}

std::vector<CorpusUtterance> LoadUtterances(
    const Manifest &m, std::span<const ManifestEntry *const> entries,
    const std::map<std::string, AlignmentRecord> &alignments) {
  std::vector<CorpusUtterance> out(entries.size());
  std::exception_ptr error;
  const long n = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      const ManifestEntry &e = *entries[i];
      AudioClip clip = ReadWav(m.Resolve(e.audio_path));
      clip.speaker_id = e.speaker_id;
      clip.utterance_id = e.utterance_id;
      auto a = alignments.find(e.utterance_id);
      if (a != alignments.end()) {
        const SpeechSpan span = NonSilenceSpan(a->second, kDefaultSilenceLabels);
        if (span.empty())
          ThrowValidation("utterance '", e.utterance_id, "' has no non-silence segment");
        const double sr = clip.sample_rate_hz;
        const std::size_t len = clip.samples.size();
        const std::size_t b = std::min<std::size_t>(std::llround(span.start_sec * sr), len);
        const std::size_t en = std::min<std::size_t>(std::llround(span.end_sec * sr), len);
        if (en <= b)
          ThrowValidation("utterance '", e.utterance_id, "': speech span [",
                          span.start_sec, ", ", span.end_sec, ") lies outside the ",
                          len, "-sample clip");
        clip.samples = std::vector<double>(clip.samples.begin() + b, clip.samples.begin() + en);
      }
      out[i].clip = std::move(clip);
      out[i].word_id = e.word_id;
    } catch (...) {
#pragma omp critical(dysaug_corpus_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::map<std::string, SpeakerDurationStats> SpeakerDurations(
    const Manifest &m, const std::map<std::string, AlignmentRecord> &alignments) {
  std::map<std::string, std::vector<AlignmentRecord>> per_speaker;
  for (const ManifestEntry &e : m.entries) {
    auto a = alignments.find(e.utterance_id);
    if (a != alignments.end()) per_speaker[e.speaker_id].push_back(a->second);
  }
  std::map<std::string, SpeakerDurationStats> out;
  for (const auto &kv : per_speaker) out[kv.first] = ComputeDurationStats(kv.first, kv.second);
  return out;
}

double SpeakerFactorFor(const Manifest &m,
                        const std::map<std::string, AlignmentRecord> &alignments,
                        const std::string &target_speaker) {
  const auto stats = SpeakerDurations(m, alignments);
  std::vector<SpeakerDurationStats> controls;
  for (const std::string &spk : m.Speakers(SpeakerRole::kControl)) {
    auto it = stats.find(spk);
    if (it == stats.end())
      ThrowValidation("control speaker '", spk, "' has no alignments");
    controls.push_back(it->second);
  }
  auto t = stats.find(target_speaker);
  if (t == stats.end())
    ThrowValidation("target speaker '", target_speaker, "' has no alignments");
  return SpeakerDependentFactor(controls, t->second);
}

}  // namespace dysaug
