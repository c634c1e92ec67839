// neural/layers.cc

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

#include "dysaug/neural/layers.h"

#include <algorithm>
#include <cmath>

#include "dysaug/base/errors.h"

namespace dysaug {

double Relu(double x) { return x > 0.0 ? x : 0.0; }

double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

namespace {
void CheckSameSize(std::size_t a, std::size_t b, const char *what) {
  if (a != b) ThrowValidation(what, ": size mismatch (", a, " vs ", b, ")");
}
}  // namespace

std::vector<double> ReluForward(std::span<const double> x) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = Relu(x[i]);
  return y;
}

std::vector<double> ReluBackward(std::span<const double> x,
                                 std::span<const double> upstream) {
  CheckSameSize(x.size(), upstream.size(), "ReluBackward");
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = x[i] > 0.0 ? upstream[i] : 0.0;
  return g;
}

std::vector<double> SigmoidForward(std::span<const double> x) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = Sigmoid(x[i]);
  return y;
}

std::vector<double> SigmoidBackward(std::span<const double> y,
                                    std::span<const double> upstream) {
  CheckSameSize(y.size(), upstream.size(), "SigmoidBackward");
  std::vector<double> g(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) g[i] = upstream[i] * y[i] * (1.0 - y[i]);
  return g;
}

Tensor4 ReluForward(const Tensor4 &x) {
  Tensor4 y(x.shape());
  for (std::size_t i = 0; i < x.data().size(); ++i) y.data()[i] = Relu(x.data()[i]);
  return y;
}

Tensor4 ReluBackward(const Tensor4 &x, const Tensor4 &upstream) {
  if (!(x.shape() == upstream.shape()))
    ThrowValidation("ReluBackward: shape ", x.shape().ToString(), " vs ",
                    upstream.shape().ToString());
  Tensor4 g(x.shape());
  for (std::size_t i = 0; i < x.data().size(); ++i)
    g.data()[i] = x.data()[i] > 0.0 ? upstream.data()[i] : 0.0;
  return g;
}

LinearLayer LinearLayer::Create(const std::string &name, std::size_t in_features,
                                std::size_t out_features) {
  if (in_features == 0 || out_features == 0)
    ThrowValidation("LinearLayer '", name, "': sizes must be positive");
  LinearLayer l;
  l.in_features = in_features;
  l.out_features = out_features;
  l.weight = Parameter(name + ".weight", {out_features, in_features});
  l.bias = Parameter(name + ".bias", {out_features});
  return l;
}

void LinearLayer::InitGaussian(RandomStream *rng, double stddev) {
  for (double &v : weight.value) v = rng->Normal(0.0, stddev);
  std::fill(bias.value.begin(), bias.value.end(), 0.0);
  weight.ZeroGrad();
  bias.ZeroGrad();
}

std::vector<double> LinearForward(std::span<const double> x, std::size_t batch,
                                  const LinearLayer &layer) {
  if (x.size() != batch * layer.in_features)
    ThrowValidation("LinearForward '", layer.weight.name, "': got ", x.size(),
                    " values for batch ", batch, " x ", layer.in_features);
  std::vector<double> y(batch * layer.out_features);
  for (std::size_t b = 0; b < batch; ++b) {
    const double *xr = x.data() + b * layer.in_features;
    for (std::size_t o = 0; o < layer.out_features; ++o) {
      const double *wr = layer.weight.value.data() + o * layer.in_features;
      double s = layer.bias.value[o];
      for (std::size_t i = 0; i < layer.in_features; ++i) s += wr[i] * xr[i];
      y[b * layer.out_features + o] = s;
    }
  }
  return y;
}

LinearGrads LinearBackward(std::span<const double> x, std::size_t batch,
                           const LinearLayer &layer,
                           std::span<const double> upstream) {
  if (x.size() != batch * layer.in_features ||
      upstream.size() != batch * layer.out_features)
    ThrowValidation("LinearBackward '", layer.weight.name, "': shape mismatch");
  LinearGrads g;
  g.grad_x.assign(x.size(), 0.0);
  g.grad_w.assign(layer.weight.size(), 0.0);
  g.grad_b.assign(layer.out_features, 0.0);
  for (std::size_t b = 0; b < batch; ++b) {
    const double *xr = x.data() + b * layer.in_features;
    double *gx = g.grad_x.data() + b * layer.in_features;
    for (std::size_t o = 0; o < layer.out_features; ++o) {
      const double u = upstream[b * layer.out_features + o];
      const double *wr = layer.weight.value.data() + o * layer.in_features;
      double *gw = g.grad_w.data() + o * layer.in_features;
      g.grad_b[o] += u;
      for (std::size_t i = 0; i < layer.in_features; ++i) {
        gw[i] += u * xr[i];
        gx[i] += u * wr[i];
      }
    }
  }
  return g;
}

}  // namespace dysaug
