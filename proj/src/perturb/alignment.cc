// perturb/alignment.cc

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

#include "dysaug/perturb/alignment.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"

namespace dysaug {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

double ParseSeconds(std::string_view field, std::string_view name,
                    std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v))
    ThrowValidation(name, ":", line_no, ": bad time value '", field, "'");
  return v;
}

}  // namespace

std::vector<AlignmentRecord> ParseAlignments(std::string_view text,
                                             std::string_view name) {
  std::vector<AlignmentRecord> records;
  std::map<std::string, std::size_t, std::less<>> index;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 4)
      ThrowValidation(name, ":", line_no, ": expected 4 tab-separated fields, got ",
                      f.size());
    if (f[0].empty() || f[1].empty())
      ThrowValidation(name, ":", line_no, ": empty utterance id or phone label");
    PhoneSegment seg{std::string(f[1]), ParseSeconds(f[2], name, line_no),
                     ParseSeconds(f[3], name, line_no)};
    if (seg.start_sec < 0.0)
      ThrowValidation(name, ":", line_no, ": negative start time");
    if (!(seg.end_sec > seg.start_sec))
      ThrowValidation(name, ":", line_no, ": end ", seg.end_sec,
                      " not after start ", seg.start_sec);

    auto it = index.find(f[0]);
    if (it == index.end()) {
      it = index.emplace(std::string(f[0]), records.size()).first;
      records.push_back({std::string(f[0]), {}});
    }
    AlignmentRecord &rec = records[it->second];
    if (!rec.entries.empty() && seg.start_sec < rec.entries.back().end_sec)
      ThrowValidation(name, ":", line_no, ": segment starting at ", seg.start_sec,
                      " overlaps or precedes the previous segment of '",
                      rec.utterance_id, "' ending at ", rec.entries.back().end_sec);
    rec.entries.push_back(std::move(seg));
  }
  return records;
}

std::vector<AlignmentRecord> ReadAlignments(const std::filesystem::path &path) {
  return ParseAlignments(ReadFileBytes(path), path.string());
}

std::string FormatAlignments(std::span<const AlignmentRecord> records) {
  std::string out;
  char buf[64];
  for (const AlignmentRecord &rec : records) {
    for (const PhoneSegment &seg : rec.entries) {
      out += rec.utterance_id;
      out += '\t';
      out += seg.phone;
      std::snprintf(buf, sizeof(buf), "\t%.6f\t%.6f\n", seg.start_sec, seg.end_sec);
      out += buf;
    }
  }
  return out;
}

SpeechSpan NonSilenceSpan(const AlignmentRecord &record,
                          const std::set<std::string> &silence_labels) {
  SpeechSpan span;
  bool found = false;
  for (const PhoneSegment &seg : record.entries) {
    if (silence_labels.count(seg.phone)) continue;
    if (!found) span.start_sec = seg.start_sec;
    span.end_sec = seg.end_sec;
    found = true;
  }
  return span;
}

}  // namespace dysaug
