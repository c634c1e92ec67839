// perturb/alignment.h

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

#ifndef DYSAUG_PERTURB_ALIGNMENT_H_
#define DYSAUG_PERTURB_ALIGNMENT_H_

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dysaug {

struct PhoneSegment {
  std::string phone;
  double start_sec = 0.0;
  double end_sec = 0.0;

  double Duration() const { return end_sec - start_sec; }
};

// Phone segmentation of one utterance; entries sorted and non-overlapping.
struct AlignmentRecord {
  std::string utterance_id;
  std::vector<PhoneSegment> entries;
};

inline const std::set<std::string> kDefaultSilenceLabels = {"sil", "sp"};

// Tab-separated text, one segment per line:
//   utterance_id <TAB> phone <TAB> start_sec <TAB> end_sec
// Blank lines are ignored.  Records are returned in first-appearance order.
// Malformed, unsorted or overlapping lines throw ValidationError naming
// `name` and the 1-based line number.
std::vector<AlignmentRecord> ParseAlignments(std::string_view text,
                                             std::string_view name);
std::vector<AlignmentRecord> ReadAlignments(const std::filesystem::path &path);
std::string FormatAlignments(std::span<const AlignmentRecord> records);

// [first non-silence start, last non-silence end] of a record; empty when the
// record has no speech.
struct SpeechSpan {
  double start_sec = 0.0;
  double end_sec = 0.0;
  bool empty() const { return end_sec <= start_sec; }
};
SpeechSpan NonSilenceSpan(const AlignmentRecord &record,
                          const std::set<std::string> &silence_labels);

}  // namespace dysaug

#endif  // DYSAUG_PERTURB_ALIGNMENT_H_
