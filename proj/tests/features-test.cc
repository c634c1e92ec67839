// tests/features-test.cc

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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dysaug/base/errors.h"
#include "dysaug/base/random.h"
#include "dysaug/features/fbank.h"
#include "dysaug/features/feature-io.h"
#include "dysaug/features/norm-stats.h"
#include "test-util.h"

namespace dysaug {
namespace {

using testing::DirectFbank;
using testing::NoiseClip;
using testing::Tone;

TEST(Fbank, ZeroClipHitsFloor) {
  AudioClip c;
  c.samples.assign(4000, 0.0);
  const FbankMatrix m = ExtractFbank(c);
  EXPECT_EQ(m.num_bins, 40u);
  for (double v : m.values) EXPECT_EQ(v, std::log(1e-10));
}

TEST(Fbank, FrameCountFormula) {
  AudioClip c = NoiseClip(41, 16000);
  EXPECT_EQ(ExtractFbank(c).num_frames, 98u);
  const FrameGeometry g = GetFrameGeometry(FbankOptions{}, 16000);
  for (std::size_t n = 400; n < 2000; n += 37) {
    c.samples.assign(n, 0.01);
    EXPECT_EQ(ExtractFbank(c).num_frames, 1 + (n - 400) / 160) << n;
    EXPECT_EQ(NumFrames(n, g), 1 + (n - 400) / 160);
  }
}

TEST(Fbank, RejectsShortClip) {
  AudioClip c;
  c.samples.assign(399, 0.0);
  EXPECT_THROW(ExtractFbank(c), ValidationError);
}

TEST(Fbank, ToneLandsInCoveringBin) {
  const FbankMatrix m = ExtractFbank(Tone(1000.0, 0.5));
  // Mel-scale oracle: the filter with the largest triangle weight at 1 kHz.
  auto mel = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  const double step = mel(8000.0) / 41.0;
  const double m1k = mel(1000.0);
  std::size_t want = 0;
  double best = -1.0;
  for (std::size_t b = 0; b < 40; ++b) {
    const double l = b * step, c = (b + 1) * step, r = (b + 2) * step;
    const double w = std::max(0.0, std::min((m1k - l) / (c - l), (r - m1k) / (r - c)));
    if (w > best) {
      best = w;
      want = b;
    }
  }
  for (std::size_t t = 0; t < m.num_frames; ++t) {
    const auto row = m.Row(t);
    EXPECT_EQ(static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin()),
              want);
  }
}

TEST(Fbank, MatchesDirectOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    AudioClip c = NoiseClip(100 + seed, 3000 + 97 * seed, 0.3);
    const FbankMatrix got = ExtractFbank(c);
    const FbankMatrix want = DirectFbank(c);
    ASSERT_EQ(got.num_frames, want.num_frames);
    for (std::size_t i = 0; i < got.values.size(); ++i) {
      const double a = got.values[i], b = want.values[i];
      EXPECT_LE(std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-7}), 1e-6);
    }
  }
}

TEST(Fbank, AmplitudeMonotone) {
  const AudioClip c = NoiseClip(42, 4000, 0.1);
  AudioClip louder = c;
  for (double &v : louder.samples) v *= 1.7;
  const FbankMatrix a = ExtractFbank(c), b = ExtractFbank(louder);
  for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_GE(b.values[i], a.values[i]);
}

TEST(Fbank, DeterministicAndMatchesSerial) {
  const AudioClip c = NoiseClip(43, 12000);
  const FbankMatrix a = ExtractFbank(c);
  EXPECT_EQ(a.values, ExtractFbank(c).values);
  EXPECT_EQ(a.values, reference::ExtractFbank(c).values);
}

FbankMatrix RandomMatrix(std::uint64_t seed, std::size_t t, const std::string &spk) {
  RandomStream rng(seed);
  FbankMatrix m(t, 40);
  for (double &v : m.values) v = rng.Normal(-3.0, 2.0);
  m.speaker_id = spk;
  return m;
}

TEST(NormStats, IdenticalRowsGiveFloor) {
  FbankMatrix m(10, 40, 2.5);
  m.speaker_id = "S";
  const SpeakerNormStats s = AccumulateNormStats(std::span(&m, 1));
  for (double v : s.std) EXPECT_EQ(v, kStdFloor);
  const FbankMatrix n = Normalize(m, s);
  for (double v : n.values) EXPECT_TRUE(std::isfinite(v));
}

TEST(NormStats, TwoPassOracleAndPooling) {
  std::vector<FbankMatrix> mats = {RandomMatrix(1, 30, "S"), RandomMatrix(2, 17, "S")};
  const SpeakerNormStats s = AccumulateNormStats(mats);
  EXPECT_EQ(s.frame_count, 47u);
  FbankMatrix cat(47, 40);
  cat.speaker_id = "S";
  std::copy(mats[0].values.begin(), mats[0].values.end(), cat.values.begin());
  std::copy(mats[1].values.begin(), mats[1].values.end(), cat.values.begin() + 30 * 40);
  const SpeakerNormStats c = AccumulateNormStats(std::span(&cat, 1));
  for (std::size_t f = 0; f < 40; ++f) {
    double mean = 0.0;
    for (std::size_t t = 0; t < 47; ++t) mean += cat.at(t, f);
    mean /= 47.0;
    double var = 0.0;
    for (std::size_t t = 0; t < 47; ++t) var += (cat.at(t, f) - mean) * (cat.at(t, f) - mean);
    var /= 47.0;
    EXPECT_NEAR(s.mean[f], mean, 1e-10);
    EXPECT_NEAR(s.std[f], std::sqrt(var), 1e-10);
    EXPECT_NEAR(c.mean[f], s.mean[f], 1e-10);
    EXPECT_NEAR(c.std[f], s.std[f], 1e-10);
  }
}

TEST(NormStats, MergeMatchesSequential) {
  NormAccumulator a("S"), b("S"), all("S");
  const FbankMatrix m1 = RandomMatrix(3, 11, "S"), m2 = RandomMatrix(4, 23, "S");
  a.Add(m1);
  b.Add(m2);
  all.Add(m1);
  all.Add(m2);
  a.Merge(b);
  const SpeakerNormStats x = a.Finalize(), y = all.Finalize();
  for (std::size_t f = 0; f < 40; ++f) {
    EXPECT_NEAR(x.mean[f], y.mean[f], 1e-12);
    EXPECT_NEAR(x.std[f], y.std[f], 1e-12);
  }
}

TEST(NormStats, MixedSpeakersRejected) {
  std::vector<FbankMatrix> mats = {RandomMatrix(5, 5, "S"), RandomMatrix(6, 5, "T")};
  EXPECT_THROW(AccumulateNormStats(mats), ValidationError);
}

TEST(NormStats, NormalizeRoundTripAndMoments) {
  std::vector<FbankMatrix> mats = {RandomMatrix(7, 40, "S"), RandomMatrix(8, 25, "S")};
  const SpeakerNormStats s = AccumulateNormStats(mats);
  std::vector<FbankMatrix> normed;
  for (const auto &m : mats) {
    normed.push_back(Normalize(m, s));
    const FbankMatrix back = Denormalize(normed.back(), s);
    for (std::size_t i = 0; i < m.values.size(); ++i) EXPECT_NEAR(back.values[i], m.values[i], 1e-10);
  }
  const SpeakerNormStats n = AccumulateNormStats(normed);
  for (std::size_t f = 0; f < 40; ++f) {
    EXPECT_LT(std::abs(n.mean[f]), 1e-8);
    EXPECT_NEAR(n.std[f], 1.0, 1e-6);
  }
  FbankMatrix other = mats[0];
  other.speaker_id = "T";
  EXPECT_THROW(Normalize(other, s), ValidationError);
}

TEST(FeatureIo, BinaryRoundTrip) {
  FbankMatrix m = RandomMatrix(9, 13, "D01");
  m.utterance_id = "D01_W01_1";
  const std::string bytes = EncodeFbank(m);
  EXPECT_EQ(bytes.substr(0, 4), "FBK1");
  EXPECT_EQ(bytes.size(), 12 + 13 * 40 * 4 + std::string("speaker=D01\nutt=D01_W01_1\n").size());
  const FbankMatrix d = DecodeFbank(bytes, "mem");
  EXPECT_EQ(d.num_frames, 13u);
  EXPECT_EQ(d.speaker_id, "D01");
  EXPECT_EQ(d.utterance_id, "D01_W01_1");
  for (std::size_t i = 0; i < m.values.size(); ++i)
    EXPECT_EQ(d.values[i], static_cast<double>(static_cast<float>(m.values[i])));
  EXPECT_EQ(EncodeFbank(d), bytes);
}

TEST(FeatureIo, BadMagicRejected) {
  std::string bytes = EncodeFbank(RandomMatrix(10, 2, "S"));
  bytes[3] = '2';
  EXPECT_THROW(DecodeFbank(bytes, "bad"), ValidationError);
  EXPECT_THROW(DecodeFbank(bytes.substr(0, 10), "short"), ValidationError);
}

TEST(FeatureIo, TextFormat) {
  FbankMatrix m(2, 3);
  m.values = {1.0, -0.5, 1.0 / 3.0, 0.0, 2e-10, 12345.678};
  EXPECT_EQ(FormatFbankText(m), "1 -0.5 0.333333333\n0 2e-10 12345.678\n");
}

}  // namespace
}  // namespace dysaug
