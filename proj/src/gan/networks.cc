// gan/networks.cc

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

#include "dysaug/gan/networks.h"

#include "dysaug/base/errors.h"

namespace dysaug {
namespace {

void AddInto(std::vector<double> *dst, const std::vector<double> &src) {
  for (std::size_t i = 0; i < src.size(); ++i) (*dst)[i] += src[i];
}

std::vector<double> FlattenedProbsGrad(std::span<const double> grad_probs,
                                       const std::vector<double> &probs) {
  return SigmoidBackward(probs, grad_probs);
}

}  // namespace

Generator::Generator() {
  const std::size_t h = kHiddenChannels;
  layers[0] = Conv2dLayer::Create("gen.conv1", 1, h, 3, 3, 1, 1, Padding::kReplicateSame);
  layers[1] = Conv2dLayer::Create("gen.conv2", h, h, 3, 3, 1, 1, Padding::kReplicateSame);
  layers[2] = Conv2dLayer::Create("gen.conv3", h, h, 3, 3, 1, 1, Padding::kReplicateSame);
  layers[3] = Conv2dLayer::Create("gen.conv4", h, 1, 3, 3, 1, 1, Padding::kReplicateSame);
}

void Generator::Init(RandomStream *rng, double stddev) {
  for (Conv2dLayer &l : layers) l.InitGaussian(rng, stddev);
}

Tensor4 Generator::Forward(const Tensor4 &x, Cache *cache) const {
  Cache local;
  Cache &c = cache ? *cache : local;
  c.input = x;
  for (std::size_t i = 0; i < 3; ++i) {
    c.pre[i] = Conv2dForward(i == 0 ? c.input : c.post[i - 1], layers[i]);
    c.post[i] = ReluForward(c.pre[i]);
  }
  return Conv2dForward(c.post[2], layers[3]);
}

Tensor4 Generator::Backward(const Cache &cache, const Tensor4 &grad_out,
                            bool need_input_grad) {
  Tensor4 g = grad_out;
  for (int i = 3; i >= 0; --i) {
    const Tensor4 &in = (i == 0) ? cache.input : cache.post[i - 1];
    const bool want_x = i > 0 || need_input_grad;
    Conv2dGrads cg = Conv2dBackward(in, layers[i], g, want_x);
    AddInto(&layers[i].weight.grad, cg.grad_w);
    AddInto(&layers[i].bias.grad, cg.grad_b);
    if (i == 0) return want_x ? std::move(cg.grad_x) : Tensor4();
    g = ReluBackward(cache.pre[i - 1], cg.grad_x);
  }
  return Tensor4();
}

std::vector<Parameter *> Generator::Parameters() {
  std::vector<Parameter *> p;
  for (Conv2dLayer &l : layers) {
    p.push_back(&l.weight);
    p.push_back(&l.bias);
  }
  return p;
}

std::vector<const Parameter *> Generator::Parameters() const {
  std::vector<const Parameter *> p;
  for (const Conv2dLayer &l : layers) {
    p.push_back(&l.weight);
    p.push_back(&l.bias);
  }
  return p;
}

void Generator::ZeroGrad() {
  for (Parameter *p : Parameters()) p->ZeroGrad();
}

Discriminator::Discriminator(std::size_t freq_bins, std::size_t crop_frames)
    : freq_bins_(freq_bins), crop_frames_(crop_frames) {
  std::size_t in_ch = 1;
  Shape4 s{1, 1, freq_bins, crop_frames};
  for (std::size_t i = 0; i < convs.size(); ++i) {
    convs[i] = Conv2dLayer::Create(StrCat("disc.conv", i + 1), in_ch, kChannels[i],
                                   2, 2, 2, 2, Padding::kNone);
    s = convs[i].OutputShape(s);  // throws if the crop is too small
    in_ch = kChannels[i];
  }
  reduced_freq_ = s.h;
  reduced_time_ = s.w;
  fc = LinearLayer::Create("disc.fc", FlattenSize(), 1);
}

void Discriminator::Init(RandomStream *rng, double stddev) {
  for (Conv2dLayer &l : convs) l.InitGaussian(rng, stddev);
  fc.InitGaussian(rng, stddev);
}

std::vector<double> Discriminator::Forward(const Tensor4 &x, Cache *cache) const {
  const Shape4 &s = x.shape();
  if (s.c != 1 || s.h != freq_bins_ || s.w != crop_frames_)
    ThrowValidation("Discriminator: input ", s.ToString(), " but expects (n, 1, ",
                    freq_bins_, ", ", crop_frames_, ")");
  Cache local;
  Cache &c = cache ? *cache : local;
  c.input = x;
  for (std::size_t i = 0; i < convs.size(); ++i) {
    c.pre[i] = Conv2dForward(i == 0 ? c.input : c.post[i - 1], convs[i]);
    c.post[i] = ReluForward(c.pre[i]);
  }
  c.logits = LinearForward(c.post[3].data(), s.n, fc);
  c.probs = SigmoidForward(c.logits);
  return c.probs;
}

Tensor4 Discriminator::Backward(const Cache &cache, std::span<const double> grad_probs,
                                bool accumulate_params, bool need_input_grad) {
  const std::size_t batch = cache.input.shape().n;
  if (grad_probs.size() != batch)
    ThrowValidation("Discriminator::Backward: ", grad_probs.size(),
                    " gradients for batch ", batch);
  std::vector<double> g_logits = FlattenedProbsGrad(grad_probs, cache.probs);
  LinearGrads lg = LinearBackward(cache.post[3].data(), batch, fc, g_logits);
  if (accumulate_params) {
    AddInto(&fc.weight.grad, lg.grad_w);
    AddInto(&fc.bias.grad, lg.grad_b);
  }
  Tensor4 g(cache.post[3].shape());
  g.data() = std::move(lg.grad_x);
  for (int i = 3; i >= 0; --i) {
    g = ReluBackward(cache.pre[i], g);
    const Tensor4 &in = (i == 0) ? cache.input : cache.post[i - 1];
    const bool want_x = i > 0 || need_input_grad;
    Conv2dGrads cg = Conv2dBackward(in, convs[i], g, want_x);
    if (accumulate_params) {
      AddInto(&convs[i].weight.grad, cg.grad_w);
      AddInto(&convs[i].bias.grad, cg.grad_b);
    }
    if (i == 0) return want_x ? std::move(cg.grad_x) : Tensor4();
    g = std::move(cg.grad_x);
  }
  return Tensor4();
}

std::vector<Parameter *> Discriminator::Parameters() {
  std::vector<Parameter *> p;
  for (Conv2dLayer &l : convs) {
    p.push_back(&l.weight);
    p.push_back(&l.bias);
  }
  p.push_back(&fc.weight);
  p.push_back(&fc.bias);
  return p;
}

std::vector<const Parameter *> Discriminator::Parameters() const {
  std::vector<const Parameter *> p;
  for (const Conv2dLayer &l : convs) {
    p.push_back(&l.weight);
    p.push_back(&l.bias);
  }
  p.push_back(&fc.weight);
  p.push_back(&fc.bias);
  return p;
}

void Discriminator::ZeroGrad() {
  for (Parameter *p : Parameters()) p->ZeroGrad();
}

}  // namespace dysaug
