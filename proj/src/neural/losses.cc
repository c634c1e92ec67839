// neural/losses.cc

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

#include "dysaug/neural/losses.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dysaug/base/errors.h"

namespace dysaug {
namespace {

// Smallest positive value the gradients divide by; a probability that has
// underflowed to exactly 0 or 1 gets a large but finite slope, which the
// sigmoid derivative then multiplies back down.
constexpr double kGradFloor = std::numeric_limits<double>::min();

double ClampProb(double p) {
  return p < kProbClamp ? kProbClamp : (p > 1.0 - kProbClamp ? 1.0 - kProbClamp : p);
}

// -mean(log p) and its gradient.
LossAndGrad NegMeanLog(std::span<const double> p) {
  LossAndGrad r;
  r.grad.resize(p.size());
  const double inv_n = 1.0 / static_cast<double>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double c = ClampProb(p[i]);
    r.loss -= std::log(c) * inv_n;
    r.grad[i] = -inv_n / std::max(p[i], kGradFloor);
  }
  return r;
}

// -mean(log(1 - p)) and its gradient.
LossAndGrad NegMeanLogOneMinus(std::span<const double> p) {
  LossAndGrad r;
  r.grad.resize(p.size());
  const double inv_n = 1.0 / static_cast<double>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double c = ClampProb(p[i]);
    r.loss -= std::log(1.0 - c) * inv_n;
    r.grad[i] = inv_n / std::max(1.0 - p[i], kGradFloor);
  }
  return r;
}

void CheckBatch(std::span<const double> p, const char *what) {
  if (p.empty()) ThrowValidation(what, ": empty batch");
  for (double v : p)
    if (!std::isfinite(v)) ThrowRuntime(what, ": non-finite probability");
}

}  // namespace

DiscriminatorLoss DiscriminatorBce(std::span<const double> d_real,
                                   std::span<const double> d_fake) {
  CheckBatch(d_real, "DiscriminatorBce(real)");
  CheckBatch(d_fake, "DiscriminatorBce(fake)");
  LossAndGrad real = NegMeanLog(d_real);
  LossAndGrad fake = NegMeanLogOneMinus(d_fake);
  return {real.loss + fake.loss, std::move(real.grad), std::move(fake.grad)};
}

LossAndGrad GeneratorBce(std::span<const double> d_fake, GeneratorLossKind kind) {
  CheckBatch(d_fake, "GeneratorBce");
  if (kind == GeneratorLossKind::kNonSaturating) return NegMeanLog(d_fake);
  LossAndGrad r = NegMeanLogOneMinus(d_fake);
  r.loss = -r.loss;
  for (double &g : r.grad) g = -g;
  return r;
}

GanLossValues BceLosses(std::span<const double> d_real, std::span<const double> d_fake,
                        GeneratorLossKind kind) {
  return {DiscriminatorBce(d_real, d_fake).loss, GeneratorBce(d_fake, kind).loss};
}

}  // namespace dysaug
