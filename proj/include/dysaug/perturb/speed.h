// perturb/speed.h

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

#ifndef DYSAUG_PERTURB_SPEED_H_
#define DYSAUG_PERTURB_SPEED_H_

#include "dysaug/dsp/audio.h"
#include "dysaug/dsp/resample.h"

namespace dysaug {

// y(t) = x(alpha t): duration scales by 1/alpha and every frequency by alpha.
inline AudioClip SpeedPerturb(const AudioClip &clip, double alpha) {
  return Resample(clip, alpha);
}

}  // namespace dysaug

#endif  // DYSAUG_PERTURB_SPEED_H_
