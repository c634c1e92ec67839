// pipeline/corpus.h

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

#ifndef DYSAUG_PIPELINE_CORPUS_H_
#define DYSAUG_PIPELINE_CORPUS_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dysaug/gan/pairs.h"
#include "dysaug/perturb/alignment.h"
#include "dysaug/perturb/duration-stats.h"
#include "dysaug/pipeline/manifest.h"

namespace dysaug {

// Alignment records of every entry that has an alignment_ref, keyed by
// utterance id.  Each referenced file is read once.  Rejects an entry whose
// file has no record for it.
std::map<std::string, AlignmentRecord> LoadAlignments(const Manifest &m);

// Reads the audio of `entries`, cut to the non-silence span of its
// alignment when one is available.
std::vector<CorpusUtterance> LoadUtterances(
    const Manifest &m, std::span<const ManifestEntry *const> entries,
    const std::map<std::string, AlignmentRecord> &alignments);

// Mean non-silence phone duration per speaker that has alignments.
std::map<std::string, SpeakerDurationStats> SpeakerDurations(
    const Manifest &m, const std::map<std::string, AlignmentRecord> &alignments);

// Speaker-dependent factor for a disordered speaker against all control
// speakers of the manifest.
double SpeakerFactorFor(const Manifest &m,
                        const std::map<std::string, AlignmentRecord> &alignments,
                        const std::string &target_speaker);

}  // namespace dysaug

#endif  // DYSAUG_PIPELINE_CORPUS_H_
