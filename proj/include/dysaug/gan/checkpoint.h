// gan/checkpoint.h

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

#ifndef DYSAUG_GAN_CHECKPOINT_H_
#define DYSAUG_GAN_CHECKPOINT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "dysaug/gan/networks.h"
#include "dysaug/neural/adam.h"

namespace dysaug {

inline constexpr std::uint32_t kCheckpointVersion = 1;
inline constexpr std::uint32_t kDefaultCropFrames = 64;

struct GanCheckpoint {
  std::string target_speaker_id;
  Generator generator;
  Discriminator discriminator;
  AdamState adam_g;
  AdamState adam_d;
  std::uint64_t iteration = 0;
  double lr_current = 0.0;
  std::uint32_t crop_frames = kDefaultCropFrames;
  std::uint32_t format_version = kCheckpointVersion;

  // Freshly initialized networks with zeroed optimizer state.
  static GanCheckpoint Fresh(const std::string &speaker_id, std::uint32_t crop_frames,
                             RandomStream *rng, double lr);
};

// Parameter values are stored as float32; callers that need in-memory and
// on-disk checkpoints to behave the same should call QuantizeToFloat first.
std::string EncodeCheckpoint(const GanCheckpoint &cp);
GanCheckpoint DecodeCheckpoint(std::string_view bytes, const std::string &name);

void WriteCheckpoint(const std::string &path, const GanCheckpoint &cp);
GanCheckpoint ReadCheckpoint(const std::string &path);

// Rounds every weight and moment to the nearest float32.
void QuantizeToFloat(GanCheckpoint *cp);

// Short stable identifier: "<speaker>@<iteration>-<fnv1a64 of encoding>".
std::string CheckpointId(const GanCheckpoint &cp);

}  // namespace dysaug

#endif  // DYSAUG_GAN_CHECKPOINT_H_
