// gan/checkpoint.cc

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

#include "dysaug/gan/checkpoint.h"

#include <cstdio>
#include <utility>
#include <vector>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"
#include "dysaug/features/fbank.h"

namespace dysaug {
namespace {

constexpr std::string_view kMagic = "DGAN";

void PutBlock(ByteWriter *w, const std::vector<std::size_t> &shape,
              const std::vector<double> &values) {
  w->PutU32(static_cast<std::uint32_t>(shape.size()));
  for (std::size_t d : shape) w->PutU32(static_cast<std::uint32_t>(d));
  for (double v : values) w->PutF32(static_cast<float>(v));
}

void GetBlock(ByteReader *r, const std::string &what,
              const std::vector<std::size_t> &expect, std::vector<double> *values) {
  const std::uint32_t ndims = r->GetU32();
  std::vector<std::size_t> shape(ndims);
  for (auto &d : shape) d = r->GetU32();
  if (shape != expect) {
    std::string got, want;
    for (std::size_t d : shape) got += StrCat(got.empty() ? "" : "x", d);
    for (std::size_t d : expect) want += StrCat(want.empty() ? "" : "x", d);
    ThrowValidation(what, ": shape ", got, " does not match expected ", want);
  }
  for (double &v : *values) v = r->GetF32();
}

std::vector<const Parameter *> AllParams(const GanCheckpoint &cp) {
  std::vector<const Parameter *> p = cp.generator.Parameters();
  for (const Parameter *q : cp.discriminator.Parameters()) p.push_back(q);
  return p;
}

void PutAdam(ByteWriter *w, const AdamState &s, const std::vector<const Parameter *> &params) {
  w->PutU64(s.step);
  w->PutF64(s.options.beta1);
  w->PutF64(s.options.beta2);
  w->PutF64(s.options.eps);
  for (std::size_t i = 0; i < params.size(); ++i) {
    PutBlock(w, params[i]->shape, s.first_moment[i]);
    PutBlock(w, params[i]->shape, s.second_moment[i]);
  }
}

void GetAdam(ByteReader *r, const std::string &name, AdamState *s,
             const std::vector<const Parameter *> &params) {
  s->step = r->GetU64();
  s->options.beta1 = r->GetF64();
  s->options.beta2 = r->GetF64();
  s->options.eps = r->GetF64();
  s->first_moment.assign(params.size(), {});
  s->second_moment.assign(params.size(), {});
  for (std::size_t i = 0; i < params.size(); ++i) {
    s->first_moment[i].assign(params[i]->size(), 0.0);
    s->second_moment[i].assign(params[i]->size(), 0.0);
    GetBlock(r, StrCat(name, ": adam m of ", params[i]->name), params[i]->shape,
             &s->first_moment[i]);
    GetBlock(r, StrCat(name, ": adam v of ", params[i]->name), params[i]->shape,
             &s->second_moment[i]);
  }
}

double ToFloat(double v) { return static_cast<double>(static_cast<float>(v)); }

}  // namespace

GanCheckpoint GanCheckpoint::Fresh(const std::string &speaker_id,
                                   std::uint32_t crop_frames, RandomStream *rng,
                                   double lr) {
  GanCheckpoint cp;
  cp.target_speaker_id = speaker_id;
  cp.crop_frames = crop_frames;
  cp.lr_current = lr;
  cp.discriminator = Discriminator(kNumMelBins, crop_frames);
  cp.generator.Init(rng);
  cp.discriminator.Init(rng);
  cp.adam_g = AdamState::For(cp.generator.Parameters());
  cp.adam_d = AdamState::For(cp.discriminator.Parameters());
  return cp;
}

std::string EncodeCheckpoint(const GanCheckpoint &cp) {
  ByteWriter w;
  w.PutBytes(kMagic);
  w.PutU32(cp.format_version);
  w.PutU32(static_cast<std::uint32_t>(cp.target_speaker_id.size()));
  w.PutBytes(cp.target_speaker_id);
  w.PutU32(cp.crop_frames);
  w.PutU64(cp.iteration);
  w.PutF64(cp.lr_current);
  const std::vector<const Parameter *> params = AllParams(cp);
  for (const Parameter *p : params) PutBlock(&w, p->shape, p->value);
  std::vector<const Parameter *> gp = cp.generator.Parameters();
  std::vector<const Parameter *> dp = cp.discriminator.Parameters();
  PutAdam(&w, cp.adam_g, gp);
  PutAdam(&w, cp.adam_d, dp);
  return w.bytes();
}

GanCheckpoint DecodeCheckpoint(std::string_view bytes, const std::string &name) {
  ByteReader r(bytes, name);
  if (r.GetBytes(4) != kMagic) ThrowValidation(name, ": bad magic (not a DGAN checkpoint)");
  GanCheckpoint cp;
  cp.format_version = r.GetU32();
  if (cp.format_version != kCheckpointVersion)
    ThrowValidation(name, ": checkpoint version ", cp.format_version,
                    " but this build reads version ", kCheckpointVersion);
  const std::uint32_t id_len = r.GetU32();
  cp.target_speaker_id = std::string(r.GetBytes(id_len));
  cp.crop_frames = r.GetU32();
  cp.iteration = r.GetU64();
  cp.lr_current = r.GetF64();
  cp.discriminator = Discriminator(kNumMelBins, cp.crop_frames);
  std::vector<Parameter *> params = cp.generator.Parameters();
  for (Parameter *p : cp.discriminator.Parameters()) params.push_back(p);
  for (Parameter *p : params) GetBlock(&r, StrCat(name, ": ", p->name), p->shape, &p->value);
  std::vector<const Parameter *> gp = std::as_const(cp.generator).Parameters();
  std::vector<const Parameter *> dp = std::as_const(cp.discriminator).Parameters();
  GetAdam(&r, name, &cp.adam_g, gp);
  GetAdam(&r, name, &cp.adam_d, dp);
  if (r.remaining() != 0)
    ThrowValidation(name, ": ", r.remaining(), " trailing bytes after checkpoint");
  return cp;
}

void WriteCheckpoint(const std::string &path, const GanCheckpoint &cp) {
  WriteFileBytes(path, EncodeCheckpoint(cp));
}

GanCheckpoint ReadCheckpoint(const std::string &path) {
  return DecodeCheckpoint(ReadFileBytes(path), path);
}

void QuantizeToFloat(GanCheckpoint *cp) {
  std::vector<Parameter *> params = cp->generator.Parameters();
  for (Parameter *p : cp->discriminator.Parameters()) params.push_back(p);
  for (Parameter *p : params)
    for (double &v : p->value) v = ToFloat(v);
  for (AdamState *s : {&cp->adam_g, &cp->adam_d}) {
    for (auto &m : s->first_moment)
      for (double &v : m) v = ToFloat(v);
    for (auto &m : s->second_moment)
      for (double &v : m) v = ToFloat(v);
  }
}

std::string CheckpointId(const GanCheckpoint &cp) {
  const std::string bytes = EncodeCheckpoint(cp);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return StrCat(cp.target_speaker_id, "@", cp.iteration, "-", hex);
}

}  // namespace dysaug
