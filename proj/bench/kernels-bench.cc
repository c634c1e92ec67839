// bench/kernels-bench.cc

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

// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include "dysaug/base/random.h"
#include "dysaug/dsp/resample.h"
#include "dysaug/dsp/xcorr.h"
#include "dysaug/features/fbank.h"
#include "dysaug/neural/conv2d.h"

namespace dysaug {
namespace {

std::vector<double> Noise(std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> v(n);
  for (double &x : v) x = 0.1 * rng.Normal();
  return v;
}

AudioClip Clip(std::size_t n) {
  AudioClip c;
  c.samples = Noise(n, 1);
  return c;
}

void BM_Resample(benchmark::State &state) {
  const AudioClip c = Clip(16000);
  for (auto _ : state) benchmark::DoNotOptimize(Resample(c, 0.9));
}
void BM_ResampleSerial(benchmark::State &state) {
  const AudioClip c = Clip(16000);
  for (auto _ : state) benchmark::DoNotOptimize(reference::Resample(c, 0.9));
}

void BM_Fbank(benchmark::State &state) {
  const AudioClip c = Clip(32000);
  for (auto _ : state) benchmark::DoNotOptimize(ExtractFbank(c));
}
void BM_FbankSerial(benchmark::State &state) {
  const AudioClip c = Clip(32000);
  for (auto _ : state) benchmark::DoNotOptimize(reference::ExtractFbank(c));
}

void BM_Xcorr(benchmark::State &state) {
  const auto a = Noise(640, 2), b = Noise(2000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(CrossCorrelation(a, b, 160, 680));
}
void BM_XcorrSerial(benchmark::State &state) {
  const auto a = Noise(640, 2), b = Noise(2000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::CrossCorrelation(a, b, 160, 680));
}

Conv2dLayer GenLayer() {
  RandomStream rng(4);
  Conv2dLayer l = Conv2dLayer::Create("c", 8, 8, 3, 3, 1, 1, Padding::kReplicateSame);
  l.InitGaussian(&rng, 0.1);
  return l;
}
Tensor4 Batch() {
  Tensor4 x({8, 8, 40, 64});
  x.data() = Noise(x.shape().size(), 5);
  return x;
}

void BM_Conv(benchmark::State &state) {
  const Conv2dLayer l = GenLayer();
  const Tensor4 x = Batch();
  for (auto _ : state) benchmark::DoNotOptimize(Conv2dForward(x, l));
}
void BM_ConvSerial(benchmark::State &state) {
  const Conv2dLayer l = GenLayer();
  const Tensor4 x = Batch();
  for (auto _ : state) benchmark::DoNotOptimize(reference::Conv2dForward(x, l));
}
void BM_ConvBackward(benchmark::State &state) {
  const Conv2dLayer l = GenLayer();
  const Tensor4 x = Batch();
  for (auto _ : state) benchmark::DoNotOptimize(Conv2dBackward(x, l, x));
}
void BM_ConvBackwardSerial(benchmark::State &state) {
  const Conv2dLayer l = GenLayer();
  const Tensor4 x = Batch();
  for (auto _ : state) benchmark::DoNotOptimize(reference::Conv2dBackward(x, l, x));
}

BENCHMARK(BM_Resample)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResampleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fbank)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FbankSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Xcorr)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_XcorrSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Conv)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackward)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardSerial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dysaug

BENCHMARK_MAIN();
