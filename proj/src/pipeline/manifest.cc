// pipeline/manifest.cc

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

#include "dysaug/pipeline/manifest.h"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"

namespace dysaug {

using nlohmann::json;

std::string_view RoleName(SpeakerRole role) {
  return role == SpeakerRole::kControl ? "control" : "disordered";
}

SpeakerRole ParseRole(std::string_view name) {
  if (name == "control") return SpeakerRole::kControl;
  if (name == "disordered") return SpeakerRole::kDisordered;
  ThrowValidation("unknown role '", name, "' (expected control or disordered)");
}

std::filesystem::path Manifest::Resolve(const std::string &path) const {
  std::filesystem::path p(path);
  return p.is_absolute() ? p : base_dir / p;
}

std::vector<const ManifestEntry *> Manifest::WithRole(SpeakerRole role) const {
  std::vector<const ManifestEntry *> out;
  for (const ManifestEntry &e : entries)
    if (e.role == role) out.push_back(&e);
  return out;
}

std::vector<const ManifestEntry *> Manifest::ForSpeaker(const std::string &speaker_id) const {
  std::vector<const ManifestEntry *> out;
  for (const ManifestEntry &e : entries)
    if (e.speaker_id == speaker_id) out.push_back(&e);
  return out;
}

std::vector<std::string> Manifest::Speakers(SpeakerRole role) const {
  std::set<std::string> s;
  for (const ManifestEntry &e : entries)
    if (e.role == role) s.insert(e.speaker_id);
  return {s.begin(), s.end()};
}

namespace {

std::string RequireString(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) ThrowValidation(where, ": missing field '", key, "'");
  if (!it->is_string()) ThrowValidation(where, ": field '", key, "' must be a string");
  std::string v = it->get<std::string>();
  if (v.empty()) ThrowValidation(where, ": field '", key, "' is empty");
  return v;
}

}  // namespace

Manifest ParseManifest(std::string_view text, const std::string &name,
                       const std::filesystem::path &base_dir, bool check_paths) {
  Manifest m;
  m.base_dir = base_dir;
  std::set<std::string> seen;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = StrCat(name, ":", line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error &e) {
      ThrowValidation(where, ": invalid JSON (", e.what(), ")");
    }
    if (!obj.is_object()) ThrowValidation(where, ": expected a JSON object");
    ManifestEntry e;
    e.utterance_id = RequireString(obj, "utterance_id", where);
    e.speaker_id = RequireString(obj, "speaker_id", where);
    e.word_id = RequireString(obj, "word_id", where);
    e.role = ParseRole(RequireString(obj, "role", where));
    e.audio_path = RequireString(obj, "audio_path", where);
    if (obj.contains("alignment_ref") && !obj["alignment_ref"].is_null())
      e.alignment_ref = RequireString(obj, "alignment_ref", where);
    if (!seen.insert(e.utterance_id).second)
      ThrowValidation(where, ": duplicate utterance_id '", e.utterance_id, "'");
    if (check_paths && !std::filesystem::exists(m.Resolve(e.audio_path)))
      ThrowValidation(where, ": audio_path '", e.audio_path, "' does not exist (resolved to ",
                      m.Resolve(e.audio_path).string(), ")");
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest ReadManifest(const std::filesystem::path &path) {
  return ParseManifest(ReadFileBytes(path.string()), path.string(),
                       path.parent_path(), true);
}

std::string FormatManifest(const Manifest &m) {
  std::string out;
  for (const ManifestEntry &e : m.entries) {
    json obj = json::object();
    obj["utterance_id"] = e.utterance_id;
    obj["speaker_id"] = e.speaker_id;
    obj["word_id"] = e.word_id;
    obj["role"] = std::string(RoleName(e.role));
    obj["audio_path"] = e.audio_path;
    if (e.alignment_ref) obj["alignment_ref"] = *e.alignment_ref;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

void WriteManifest(const std::filesystem::path &path, const Manifest &m) {
  WriteFileBytes(path.string(), FormatManifest(m));
}

}  // namespace dysaug
