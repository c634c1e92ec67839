// gan/grad-suite.cc

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

#include "dysaug/gan/grad-suite.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dysaug/features/fbank.h"
#include "dysaug/gan/networks.h"
#include "dysaug/neural/conv2d.h"
#include "dysaug/neural/layers.h"
#include "dysaug/neural/losses.h"

namespace dysaug {
namespace {

// Values kept away from the ReLU kink so the finite difference never
// straddles it.
std::vector<double> RandomAwayFromZero(RandomStream *rng, std::size_t n) {
  std::vector<double> v(n);
  for (double &x : v) {
    const double mag = rng->Uniform(0.1, 1.0);
    x = rng->Uniform() < 0.5 ? -mag : mag;
  }
  return v;
}

void Fill(RandomStream *rng, std::vector<double> *v, double stddev) {
  for (double &x : *v) x = rng->Normal(0.0, stddev);
}

double Dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

class Collector {
 public:
  static constexpr std::size_t kMaxCoordinates = 64;

  explicit Collector(std::string name) : name_(std::move(name)) {}

  // analytic must be the gradient of f with respect to *x.  With a sampler,
  // at most kMaxCoordinates randomly chosen entries are perturbed.
  void Check(const std::function<double()> &f, std::vector<double> *x,
             const std::vector<double> &analytic, RandomStream *sampler = nullptr) {
    if (!sampler || x->size() <= kMaxCoordinates) {
      worst_ = std::max(worst_, MaxRelativeError(analytic, NumericGradient(f, x)));
      count_ += x->size();
      return;
    }
    std::vector<std::size_t> idx(x->size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    sampler->Shuffle(&idx);
    idx.resize(kMaxCoordinates);
    std::vector<double> sub(kMaxCoordinates), a(kMaxCoordinates);
    for (std::size_t k = 0; k < kMaxCoordinates; ++k) {
      sub[k] = (*x)[idx[k]];
      a[k] = analytic[idx[k]];
    }
    auto g = [&] {
      for (std::size_t k = 0; k < kMaxCoordinates; ++k) (*x)[idx[k]] = sub[k];
      return f();
    };
    const std::vector<double> numeric = NumericGradient(g, &sub);
    for (std::size_t k = 0; k < kMaxCoordinates; ++k) (*x)[idx[k]] = sub[k];
    worst_ = std::max(worst_, MaxRelativeError(a, numeric));
    count_ += kMaxCoordinates;
  }

  GradCheckResult Result(double tol) const {
    return {name_, worst_, count_, worst_ < tol};
  }

 private:
  std::string name_;
  double worst_ = 0.0;
  std::size_t count_ = 0;
};

GradCheckResult CheckConv(RandomStream *rng, Padding padding, std::size_t kernel,
                          std::size_t stride, const char *name, double tol) {
  Conv2dLayer layer = Conv2dLayer::Create("conv", 2, 3, kernel, kernel, stride, stride, padding);
  layer.InitGaussian(rng, 0.5);
  Fill(rng, &layer.bias.value, 0.5);
  Tensor4 x(Shape4{2, 2, 6, 7});
  Fill(rng, &x.data(), 1.0);
  Tensor4 r(layer.OutputShape(x.shape()));
  Fill(rng, &r.data(), 1.0);
  auto loss = [&] { return Dot(Conv2dForward(x, layer).data(), r.data()); };
  const Conv2dGrads g = Conv2dBackward(x, layer, r, true);
  Collector c(name);
  c.Check(loss, &x.data(), g.grad_x.data());
  c.Check(loss, &layer.weight.value, g.grad_w);
  c.Check(loss, &layer.bias.value, g.grad_b);
  return c.Result(tol);
}

GradCheckResult CheckRelu(RandomStream *rng, double tol) {
  std::vector<double> x = RandomAwayFromZero(rng, 64);
  std::vector<double> r(x.size());
  Fill(rng, &r, 1.0);
  Collector c("relu");
  c.Check([&] { return Dot(ReluForward(x), r); }, &x, ReluBackward(x, r));
  return c.Result(tol);
}

GradCheckResult CheckSigmoid(RandomStream *rng, double tol) {
  std::vector<double> x(64);
  Fill(rng, &x, 3.0);
  std::vector<double> r(x.size());
  Fill(rng, &r, 1.0);
  Collector c("sigmoid");
  c.Check([&] { return Dot(SigmoidForward(x), r); }, &x,
          SigmoidBackward(SigmoidForward(x), r));
  return c.Result(tol);
}

GradCheckResult CheckLinear(RandomStream *rng, double tol) {
  LinearLayer fc = LinearLayer::Create("fc", 12, 3);
  fc.InitGaussian(rng, 0.5);
  Fill(rng, &fc.bias.value, 0.5);
  const std::size_t batch = 4;
  std::vector<double> x(batch * 12), r(batch * 3);
  Fill(rng, &x, 1.0);
  Fill(rng, &r, 1.0);
  auto loss = [&] { return Dot(LinearForward(x, batch, fc), r); };
  const LinearGrads g = LinearBackward(x, batch, fc, r);
  Collector c("fc");
  c.Check(loss, &x, g.grad_x);
  c.Check(loss, &fc.weight.value, g.grad_w);
  c.Check(loss, &fc.bias.value, g.grad_b);
  return c.Result(tol);
}

std::vector<double> RandomProbs(RandomStream *rng, std::size_t n) {
  std::vector<double> p(n);
  for (double &x : p) x = rng->Uniform(0.05, 0.95);
  return p;
}

GradCheckResult CheckDiscriminatorLoss(RandomStream *rng, double tol) {
  std::vector<double> real = RandomProbs(rng, 6), fake = RandomProbs(rng, 6);
  const DiscriminatorLoss l = DiscriminatorBce(real, fake);
  auto loss = [&] { return DiscriminatorBce(real, fake).loss; };
  Collector c("bce_discriminator");
  c.Check(loss, &real, l.grad_real);
  c.Check(loss, &fake, l.grad_fake);
  return c.Result(tol);
}

GradCheckResult CheckGeneratorLoss(RandomStream *rng, GeneratorLossKind kind,
                                   const char *name, double tol) {
  std::vector<double> fake = RandomProbs(rng, 6);
  Collector c(name);
  c.Check([&] { return GeneratorBce(fake, kind).loss; }, &fake,
          GeneratorBce(fake, kind).grad);
  return c.Result(tol);
}

constexpr std::size_t kSuiteCrop = 16;

// Fan-in scaled weights keep activations O(1) through the stack and the
// sigmoid away from saturation, so gradients stay well above the
// finite-difference noise floor.
void InitForCheck(RandomStream *rng, std::vector<Parameter *> params) {
  for (Parameter *p : params) {
    if (p->shape.size() == 1) {
      Fill(rng, &p->value, 0.1);
      continue;
    }
    std::size_t fan_in = 1;
    for (std::size_t k = 1; k < p->shape.size(); ++k) fan_in *= p->shape[k];
    Fill(rng, &p->value, std::sqrt(2.0 / static_cast<double>(fan_in)));
  }
}

Discriminator SuiteDiscriminator(RandomStream *rng) {
  Discriminator d(kNumMelBins, kSuiteCrop);
  InitForCheck(rng, d.Parameters());
  // Small fc weights keep the logit near zero.
  Fill(rng, &d.fc.weight.value, 0.05);
  return d;
}

// loss_D backpropagated into every discriminator parameter and both inputs.
GradCheckResult CheckDiscriminatorNet(RandomStream *rng, double tol) {
  Discriminator d = SuiteDiscriminator(rng);
  const Shape4 s{2, 1, kNumMelBins, kSuiteCrop};
  Tensor4 real(s), fake(s);
  Fill(rng, &real.data(), 1.0);
  Fill(rng, &fake.data(), 1.0);
  auto loss = [&] { return DiscriminatorBce(d.Forward(real), d.Forward(fake)).loss; };

  Discriminator::Cache rc, fc;
  const DiscriminatorLoss l = DiscriminatorBce(d.Forward(real, &rc), d.Forward(fake, &fc));
  d.ZeroGrad();
  const Tensor4 gr = d.Backward(rc, l.grad_real, true, true);
  const Tensor4 gf = d.Backward(fc, l.grad_fake, true, true);
  Collector c("loss_d_through_discriminator");
  for (Parameter *p : d.Parameters()) c.Check(loss, &p->value, p->grad, rng);
  c.Check(loss, &real.data(), gr.data(), rng);
  c.Check(loss, &fake.data(), gf.data(), rng);
  return c.Result(tol);
}

// loss_G backpropagated through the discriminator into every generator
// parameter and the generator input.
GradCheckResult CheckGeneratorNet(RandomStream *rng, GeneratorLossKind kind,
                                  const char *name, double tol) {
  Discriminator d = SuiteDiscriminator(rng);
  Generator g;
  InitForCheck(rng, g.Parameters());
  Tensor4 x(Shape4{1, 1, kNumMelBins, kSuiteCrop});
  Fill(rng, &x.data(), 1.0);
  auto loss = [&] { return GeneratorBce(d.Forward(g.Forward(x)), kind).loss; };

  Generator::Cache gc;
  Discriminator::Cache dc;
  const Tensor4 y = g.Forward(x, &gc);
  const LossAndGrad l = GeneratorBce(d.Forward(y, &dc), kind);
  g.ZeroGrad();
  const Tensor4 gy = d.Backward(dc, l.grad, false, true);
  const Tensor4 gx = g.Backward(gc, gy, true);
  Collector c(name);
  for (Parameter *p : g.Parameters()) c.Check(loss, &p->value, p->grad, rng);
  c.Check(loss, &x.data(), gx.data(), rng);
  return c.Result(tol);
}

}  // namespace

std::vector<GradCheckResult> RunGradientSuite(std::uint64_t seed, double tolerance) {
  RandomStream rng(seed);
  std::vector<GradCheckResult> out;
  out.push_back(CheckConv(&rng, Padding::kReplicateSame, 3, 1, "conv_replicate_3x3", tolerance));
  out.push_back(CheckConv(&rng, Padding::kNone, 2, 2, "conv_valid_2x2_stride2", tolerance));
  out.push_back(CheckRelu(&rng, tolerance));
  out.push_back(CheckSigmoid(&rng, tolerance));
  out.push_back(CheckLinear(&rng, tolerance));
  out.push_back(CheckDiscriminatorLoss(&rng, tolerance));
  out.push_back(CheckGeneratorLoss(&rng, GeneratorLossKind::kNonSaturating,
                                   "bce_generator_nonsaturating", tolerance));
  out.push_back(CheckGeneratorLoss(&rng, GeneratorLossKind::kMinimax,
                                   "bce_generator_minimax", tolerance));
  out.push_back(CheckDiscriminatorNet(&rng, tolerance));
  out.push_back(CheckGeneratorNet(&rng, GeneratorLossKind::kNonSaturating,
                                  "loss_g_through_both_networks", tolerance));
  return out;
}

}  // namespace dysaug
