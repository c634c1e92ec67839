// pipeline/manifest.h

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

#ifndef DYSAUG_PIPELINE_MANIFEST_H_
#define DYSAUG_PIPELINE_MANIFEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dysaug {

enum class SpeakerRole { kControl, kDisordered };

std::string_view RoleName(SpeakerRole role);
SpeakerRole ParseRole(std::string_view name);  // "control" | "disordered"

struct ManifestEntry {
  std::string utterance_id;
  std::string speaker_id;
  std::string word_id;
  SpeakerRole role = SpeakerRole::kControl;
  std::string audio_path;                    // as written; relative to the manifest
  std::optional<std::string> alignment_ref;  // alignment TSV path, same rule
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;  // directory relative paths resolve against

  std::filesystem::path Resolve(const std::string &path) const;
  std::vector<const ManifestEntry *> WithRole(SpeakerRole role) const;
  std::vector<const ManifestEntry *> ForSpeaker(const std::string &speaker_id) const;
  // Sorted, unique.
  std::vector<std::string> Speakers(SpeakerRole role) const;
};

// JSON lines; blank lines ignored.  Rejects duplicate utterance ids, unknown
// roles, missing fields, and (when check_paths) unresolvable audio paths.
Manifest ParseManifest(std::string_view text, const std::string &name,
                       const std::filesystem::path &base_dir, bool check_paths);
Manifest ReadManifest(const std::filesystem::path &path);

std::string FormatManifest(const Manifest &m);
void WriteManifest(const std::filesystem::path &path, const Manifest &m);

}  // namespace dysaug

#endif  // DYSAUG_PIPELINE_MANIFEST_H_
