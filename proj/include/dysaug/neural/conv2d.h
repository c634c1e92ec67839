// neural/conv2d.h

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

#ifndef DYSAUG_NEURAL_CONV2D_H_
#define DYSAUG_NEURAL_CONV2D_H_

#include <cstddef>
#include <string>
#include <vector>

#include "dysaug/base/random.h"
#include "dysaug/neural/tensor.h"

namespace dysaug {

enum class Padding {
  kReplicateSame,  // edge values copied outward; output size == input size
  kNone,
};

struct Conv2dLayer {
  std::size_t in_ch = 0, out_ch = 0;
  std::size_t kernel_h = 0, kernel_w = 0;
  std::size_t stride_h = 1, stride_w = 1;
  Padding padding = Padding::kNone;
  Parameter weight;  // out_ch x in_ch x kernel_h x kernel_w
  Parameter bias;    // out_ch

  // Replicate padding requires stride 1.
  static Conv2dLayer Create(const std::string &name, std::size_t in_ch,
                            std::size_t out_ch, std::size_t kernel_h,
                            std::size_t kernel_w, std::size_t stride_h,
                            std::size_t stride_w, Padding padding);

  // Replicate: unchanged.  None: floor((in - k) / s) + 1 per spatial axis.
  // Throws with both shapes in the message on a channel mismatch or an input
  // smaller than the kernel.
  Shape4 OutputShape(const Shape4 &in) const;

  // Zero-mean Gaussian weights, zero bias.
  void InitGaussian(RandomStream *rng, double stddev);

  // Top/left replicate padding; bottom/right gets the remainder.
  std::size_t pad_top() const;
  std::size_t pad_left() const;
};

struct Conv2dGrads {
  Tensor4 grad_x;  // empty when not requested
  std::vector<double> grad_w;
  std::vector<double> grad_b;
};

// Cross-correlation (no kernel flip).  The batch/out-channel planes are
// computed in parallel; each output value is accumulated in a fixed order.
Tensor4 Conv2dForward(const Tensor4 &x, const Conv2dLayer &layer);

// Exact adjoint of Conv2dForward.  For replicate padding the gradient that
// lands on padded cells is folded back onto the border cells they copy.
Conv2dGrads Conv2dBackward(const Tensor4 &x, const Conv2dLayer &layer,
                           const Tensor4 &upstream, bool need_grad_x = true);

namespace reference {
// Direct index-clamping loops, serial.  Agree with the parallel kernels to
// rounding error.
Tensor4 Conv2dForward(const Tensor4 &x, const Conv2dLayer &layer);
Conv2dGrads Conv2dBackward(const Tensor4 &x, const Conv2dLayer &layer,
                           const Tensor4 &upstream, bool need_grad_x = true);
}  // namespace reference

}  // namespace dysaug

#endif  // DYSAUG_NEURAL_CONV2D_H_
