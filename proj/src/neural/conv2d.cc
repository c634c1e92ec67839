// neural/conv2d.cc

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

#include "dysaug/neural/conv2d.h"

#include <algorithm>

#include "dysaug/base/errors.h"

namespace dysaug {

Conv2dLayer Conv2dLayer::Create(const std::string &name, std::size_t in_ch,
                                std::size_t out_ch, std::size_t kernel_h,
                                std::size_t kernel_w, std::size_t stride_h,
                                std::size_t stride_w, Padding padding) {
  if (in_ch == 0 || out_ch == 0 || kernel_h == 0 || kernel_w == 0 ||
      stride_h == 0 || stride_w == 0)
    ThrowValidation("Conv2dLayer '", name, "': all sizes must be positive");
  if (padding == Padding::kReplicateSame && (stride_h != 1 || stride_w != 1))
    ThrowValidation("Conv2dLayer '", name,
                    "': replicate padding requires stride (1, 1)");
  Conv2dLayer layer;
  layer.in_ch = in_ch;
  layer.out_ch = out_ch;
  layer.kernel_h = kernel_h;
  layer.kernel_w = kernel_w;
  layer.stride_h = stride_h;
  layer.stride_w = stride_w;
  layer.padding = padding;
  layer.weight = Parameter(name + ".weight", {out_ch, in_ch, kernel_h, kernel_w});
  layer.bias = Parameter(name + ".bias", {out_ch});
  return layer;
}

std::size_t Conv2dLayer::pad_top() const {
  return padding == Padding::kReplicateSame ? (kernel_h - 1) / 2 : 0;
}
std::size_t Conv2dLayer::pad_left() const {
  return padding == Padding::kReplicateSame ? (kernel_w - 1) / 2 : 0;
}

Shape4 Conv2dLayer::OutputShape(const Shape4 &in) const {
  if (in.c != in_ch)
    ThrowValidation("Conv2d '", weight.name, "': input ", in.ToString(), " has ",
                    in.c, " channels, layer expects ", in_ch);
  if (in.n == 0 || in.h == 0 || in.w == 0)
    ThrowValidation("Conv2d '", weight.name, "': empty input ", in.ToString());
  if (padding == Padding::kReplicateSame) return {in.n, out_ch, in.h, in.w};
  if (in.h < kernel_h || in.w < kernel_w)
    ThrowValidation("Conv2d '", weight.name, "': input ", in.ToString(),
                    " smaller than kernel (", kernel_h, ", ", kernel_w, ")");
  return {in.n, out_ch, (in.h - kernel_h) / stride_h + 1,
          (in.w - kernel_w) / stride_w + 1};
}

void Conv2dLayer::InitGaussian(RandomStream *rng, double stddev) {
  for (double &v : weight.value) v = rng->Normal(0.0, stddev);
  std::fill(bias.value.begin(), bias.value.end(), 0.0);
  weight.ZeroGrad();
  bias.ZeroGrad();
}

namespace {

inline std::size_t Clamp(std::ptrdiff_t i, std::size_t n) {
  if (i < 0) return 0;
  if (static_cast<std::size_t>(i) >= n) return n - 1;
  return static_cast<std::size_t>(i);
}

// Input planes copied into a buffer that already contains the padding, so
// the hot loops index without bounds logic.
struct PaddedInput {
  std::size_t hp = 0, wp = 0;
  std::vector<double> data;
  const double *plane(std::size_t n, std::size_t c, std::size_t channels) const {
    return data.data() + (n * channels + c) * hp * wp;
  }
};

PaddedInput Pad(const Tensor4 &x, const Conv2dLayer &layer) {
  const Shape4 &s = x.shape();
  PaddedInput p;
  const bool rep = layer.padding == Padding::kReplicateSame;
  p.hp = rep ? s.h + layer.kernel_h - 1 : s.h;
  p.wp = rep ? s.w + layer.kernel_w - 1 : s.w;
  p.data.resize(s.n * s.c * p.hp * p.wp);
  const std::ptrdiff_t pt = static_cast<std::ptrdiff_t>(layer.pad_top());
  const std::ptrdiff_t pl = static_cast<std::ptrdiff_t>(layer.pad_left());
  const std::ptrdiff_t planes = static_cast<std::ptrdiff_t>(s.n * s.c);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t nc = 0; nc < planes; ++nc) {
    const double *src = x.data().data() + nc * s.h * s.w;
    double *dst = p.data.data() + nc * p.hp * p.wp;
    for (std::size_t i = 0; i < p.hp; ++i) {
      const double *row = src + Clamp(static_cast<std::ptrdiff_t>(i) - pt, s.h) * s.w;
      for (std::size_t j = 0; j < p.wp; ++j)
        dst[i * p.wp + j] = row[Clamp(static_cast<std::ptrdiff_t>(j) - pl, s.w)];
    }
  }
  return p;
}

// Four independent partial sums; fixed association so results are
// reproducible.
inline double StridedDot(const double *a, const double *b, std::size_t stride_b,
                         std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    s0 += a[j] * b[j * stride_b];
    s1 += a[j + 1] * b[(j + 1) * stride_b];
    s2 += a[j + 2] * b[(j + 2) * stride_b];
    s3 += a[j + 3] * b[(j + 3) * stride_b];
  }
  for (; j < n; ++j) s0 += a[j] * b[j * stride_b];
  return (s0 + s1) + (s2 + s3);
}

void CheckUpstream(const Tensor4 &x, const Conv2dLayer &layer,
                   const Tensor4 &upstream) {
  const Shape4 expect = layer.OutputShape(x.shape());
  if (!(upstream.shape() == expect))
    ThrowValidation("Conv2dBackward '", layer.weight.name, "': upstream ",
                    upstream.shape().ToString(), " does not match output ",
                    expect.ToString());
}

}  // namespace

Tensor4 Conv2dForward(const Tensor4 &x, const Conv2dLayer &layer) {
  const Shape4 in = x.shape();
  const Shape4 os = layer.OutputShape(in);
  const PaddedInput xp = Pad(x, layer);
  Tensor4 out(os);
  const std::size_t kh = layer.kernel_h, kw = layer.kernel_w;
  const std::size_t sh = layer.stride_h, sw = layer.stride_w;
  const std::ptrdiff_t jobs = static_cast<std::ptrdiff_t>(os.n * os.c);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t job = 0; job < jobs; ++job) {
    const std::size_t n = job / os.c, o = job % os.c;
    double *y = out.plane(n, o);
    std::fill(y, y + os.h * os.w, layer.bias.value[o]);
    for (std::size_t c = 0; c < in.c; ++c) {
      const double *src_plane = xp.plane(n, c, in.c);
      const double *wk = layer.weight.value.data() + ((o * in.c + c) * kh) * kw;
      for (std::size_t p = 0; p < kh; ++p) {
        for (std::size_t q = 0; q < kw; ++q) {
          const double wv = wk[p * kw + q];
          for (std::size_t i = 0; i < os.h; ++i) {
            const double *src = src_plane + (i * sh + p) * xp.wp + q;
            double *dst = y + i * os.w;
            if (sw == 1) {
              for (std::size_t j = 0; j < os.w; ++j) dst[j] += wv * src[j];
            } else {
              for (std::size_t j = 0; j < os.w; ++j) dst[j] += wv * src[j * sw];
            }
          }
        }
      }
    }
  }
  return out;
}

Conv2dGrads Conv2dBackward(const Tensor4 &x, const Conv2dLayer &layer,
                           const Tensor4 &upstream, bool need_grad_x) {
  CheckUpstream(x, layer, upstream);
  const Shape4 in = x.shape();
  const Shape4 os = upstream.shape();
  const PaddedInput xp = Pad(x, layer);
  const std::size_t kh = layer.kernel_h, kw = layer.kernel_w;
  const std::size_t sh = layer.stride_h, sw = layer.stride_w;
  const std::size_t plane_out = os.h * os.w;

  Conv2dGrads g;
  g.grad_b.assign(os.c, 0.0);
  g.grad_w.assign(layer.weight.size(), 0.0);

  const std::ptrdiff_t n_out_ch = static_cast<std::ptrdiff_t>(os.c);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t o = 0; o < n_out_ch; ++o) {
    double s = 0.0;
    for (std::size_t n = 0; n < os.n; ++n) {
      const double *u = upstream.plane(n, o);
      for (std::size_t k = 0; k < plane_out; ++k) s += u[k];
    }
    g.grad_b[o] = s;
  }

  const std::ptrdiff_t wjobs = static_cast<std::ptrdiff_t>(os.c * in.c);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t job = 0; job < wjobs; ++job) {
    const std::size_t o = job / in.c, c = job % in.c;
    double *gw = g.grad_w.data() + ((o * in.c + c) * kh) * kw;
    for (std::size_t p = 0; p < kh; ++p) {
      for (std::size_t q = 0; q < kw; ++q) {
        double s = 0.0;
        for (std::size_t n = 0; n < os.n; ++n) {
          const double *u = upstream.plane(n, o);
          const double *src_plane = xp.plane(n, c, in.c);
          for (std::size_t i = 0; i < os.h; ++i)
            s += StridedDot(u + i * os.w, src_plane + (i * sh + p) * xp.wp + q, sw,
                            os.w);
        }
        gw[p * kw + q] = s;
      }
    }
  }

  if (!need_grad_x) return g;

  g.grad_x = Tensor4(in);
  const std::ptrdiff_t pt = static_cast<std::ptrdiff_t>(layer.pad_top());
  const std::ptrdiff_t pl = static_cast<std::ptrdiff_t>(layer.pad_left());
  const std::ptrdiff_t xjobs = static_cast<std::ptrdiff_t>(in.n * in.c);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t job = 0; job < xjobs; ++job) {
    const std::size_t n = job / in.c, c = job % in.c;
    std::vector<double> gp(xp.hp * xp.wp, 0.0);
    for (std::size_t o = 0; o < os.c; ++o) {
      const double *u = upstream.plane(n, o);
      const double *wk = layer.weight.value.data() + ((o * in.c + c) * kh) * kw;
      for (std::size_t p = 0; p < kh; ++p) {
        for (std::size_t q = 0; q < kw; ++q) {
          const double wv = wk[p * kw + q];
          for (std::size_t i = 0; i < os.h; ++i) {
            double *dst = gp.data() + (i * sh + p) * xp.wp + q;
            const double *src = u + i * os.w;
            if (sw == 1) {
              for (std::size_t j = 0; j < os.w; ++j) dst[j] += wv * src[j];
            } else {
              for (std::size_t j = 0; j < os.w; ++j) dst[j * sw] += wv * src[j];
            }
          }
        }
      }
    }
    double *gx = g.grad_x.plane(n, c);
    for (std::size_t i = 0; i < xp.hp; ++i) {
      const std::size_t r = Clamp(static_cast<std::ptrdiff_t>(i) - pt, in.h);
      for (std::size_t j = 0; j < xp.wp; ++j) {
        gx[r * in.w + Clamp(static_cast<std::ptrdiff_t>(j) - pl, in.w)] +=
            gp[i * xp.wp + j];
      }
    }
  }
  return g;
}

namespace reference {

Tensor4 Conv2dForward(const Tensor4 &x, const Conv2dLayer &layer) {
  const Shape4 in = x.shape();
  const Shape4 os = layer.OutputShape(in);
  const std::ptrdiff_t pt = layer.pad_top(), pl = layer.pad_left();
  Tensor4 out(os);
  for (std::size_t n = 0; n < os.n; ++n)
    for (std::size_t o = 0; o < os.c; ++o)
      for (std::size_t i = 0; i < os.h; ++i)
        for (std::size_t j = 0; j < os.w; ++j) {
          double s = layer.bias.value[o];
          for (std::size_t c = 0; c < in.c; ++c)
            for (std::size_t p = 0; p < layer.kernel_h; ++p)
              for (std::size_t q = 0; q < layer.kernel_w; ++q) {
                std::size_t r = Clamp(
                    static_cast<std::ptrdiff_t>(i * layer.stride_h + p) - pt, in.h);
                std::size_t t = Clamp(
                    static_cast<std::ptrdiff_t>(j * layer.stride_w + q) - pl, in.w);
                s += layer.weight.value[((o * in.c + c) * layer.kernel_h + p) *
                                            layer.kernel_w + q] *
                     x.at(n, c, r, t);
              }
          out.at(n, o, i, j) = s;
        }
  return out;
}

Conv2dGrads Conv2dBackward(const Tensor4 &x, const Conv2dLayer &layer,
                           const Tensor4 &upstream, bool need_grad_x) {
  CheckUpstream(x, layer, upstream);
  const Shape4 in = x.shape();
  const Shape4 os = upstream.shape();
  const std::ptrdiff_t pt = layer.pad_top(), pl = layer.pad_left();
  Conv2dGrads g;
  g.grad_b.assign(os.c, 0.0);
  g.grad_w.assign(layer.weight.size(), 0.0);
  if (need_grad_x) g.grad_x = Tensor4(in);
  for (std::size_t n = 0; n < os.n; ++n)
    for (std::size_t o = 0; o < os.c; ++o)
      for (std::size_t i = 0; i < os.h; ++i)
        for (std::size_t j = 0; j < os.w; ++j) {
          const double u = upstream.at(n, o, i, j);
          g.grad_b[o] += u;
          for (std::size_t c = 0; c < in.c; ++c)
            for (std::size_t p = 0; p < layer.kernel_h; ++p)
              for (std::size_t q = 0; q < layer.kernel_w; ++q) {
                std::size_t r = Clamp(
                    static_cast<std::ptrdiff_t>(i * layer.stride_h + p) - pt, in.h);
                std::size_t t = Clamp(
                    static_cast<std::ptrdiff_t>(j * layer.stride_w + q) - pl, in.w);
                const std::size_t wi =
                    ((o * in.c + c) * layer.kernel_h + p) * layer.kernel_w + q;
                g.grad_w[wi] += u * x.at(n, c, r, t);
                if (need_grad_x) g.grad_x.at(n, c, r, t) += u * layer.weight.value[wi];
              }
        }
  return g;
}

}  // namespace reference
}  // namespace dysaug
