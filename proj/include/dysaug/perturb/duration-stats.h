// perturb/duration-stats.h

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

#ifndef DYSAUG_PERTURB_DURATION_STATS_H_
#define DYSAUG_PERTURB_DURATION_STATS_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>

#include "dysaug/perturb/alignment.h"

namespace dysaug {

struct SpeakerDurationStats {
  std::string speaker_id;
  double mean_phone_dur_sec = 0.0;
  std::size_t phone_count = 0;
};

// Mean duration of every non-silence phone across the records.  Throws if
// no non-silence phone remains.
SpeakerDurationStats ComputeDurationStats(
    const std::string &speaker_id, std::span<const AlignmentRecord> alignments,
    const std::set<std::string> &silence_labels = kDefaultSilenceLabels);

// Speaker-dependent tempo/speed factor for a slower (or faster) target:
//   alpha = mean_i(l_control_i) / l_target
// with an unweighted mean over control speakers.  The control means are
// summed in sorted order so the result is invariant to list order.
double SpeakerDependentFactor(std::span<const SpeakerDurationStats> controls,
                              const SpeakerDurationStats &target);

// Factor that perturbs a control segment of control_frames to the length of
// a target of target_frames (output length = input / factor).
double PairwiseMatchFactor(std::size_t control_frames, std::size_t target_frames);

}  // namespace dysaug

#endif  // DYSAUG_PERTURB_DURATION_STATS_H_
