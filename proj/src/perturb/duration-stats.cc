// perturb/duration-stats.cc

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

#include "dysaug/perturb/duration-stats.h"

#include <algorithm>
#include <vector>

#include "dysaug/base/errors.h"

namespace dysaug {

SpeakerDurationStats ComputeDurationStats(
    const std::string &speaker_id, std::span<const AlignmentRecord> alignments,
    const std::set<std::string> &silence_labels) {
  double total = 0.0;
  std::size_t count = 0;
  for (const AlignmentRecord &rec : alignments) {
    for (const PhoneSegment &seg : rec.entries) {
      if (silence_labels.count(seg.phone)) continue;
      total += seg.Duration();
      ++count;
    }
  }
  if (count == 0)
    ThrowValidation("speaker '", speaker_id, "': no non-silence phones in ",
                    alignments.size(), " alignment record(s)");
  return {speaker_id, total / static_cast<double>(count), count};
}

double SpeakerDependentFactor(std::span<const SpeakerDurationStats> controls,
                              const SpeakerDurationStats &target) {
  if (controls.empty())
    ThrowValidation("SpeakerDependentFactor: empty control speaker list");
  if (!(target.mean_phone_dur_sec > 0.0))
    ThrowValidation("SpeakerDependentFactor: target '", target.speaker_id,
                    "' has non-positive mean duration");
  std::vector<double> means;
  means.reserve(controls.size());
  for (const SpeakerDurationStats &c : controls) {
    if (!(c.mean_phone_dur_sec > 0.0))
      ThrowValidation("SpeakerDependentFactor: control '", c.speaker_id,
                      "' has non-positive mean duration");
    means.push_back(c.mean_phone_dur_sec);
  }
  std::sort(means.begin(), means.end());
  double sum = 0.0;
  for (double m : means) sum += m;
  const double control_mean = sum / static_cast<double>(means.size());
  return control_mean / target.mean_phone_dur_sec;
}

double PairwiseMatchFactor(std::size_t control_frames, std::size_t target_frames) {
  if (control_frames == 0 || target_frames == 0)
    ThrowValidation("PairwiseMatchFactor: frame counts must be positive (control=",
                    control_frames, ", target=", target_frames, ")");
  return static_cast<double>(control_frames) / static_cast<double>(target_frames);
}

}  // namespace dysaug
