// tests/perturb-test.cc

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
#include <numeric>

#include "dysaug/base/errors.h"
#include "dysaug/base/random.h"
#include "dysaug/dsp/fft.h"
#include "dysaug/perturb/alignment.h"
#include "dysaug/perturb/duration-stats.h"
#include "dysaug/perturb/speed.h"
#include "dysaug/perturb/wsola.h"
#include "test-util.h"

namespace dysaug {
namespace {

using testing::Ncc;
using testing::Tone;

double Seconds(const AudioClip &c) {
  return static_cast<double>(c.samples.size()) / c.sample_rate_hz;
}

TEST(Wsola, DefaultsFollowSampleRate) {
  const WsolaConfig cfg = WsolaConfig::ForSampleRate(16000);
  EXPECT_EQ(cfg.block_len, 640u);
  EXPECT_EQ(cfg.synthesis_hop, 320u);
  EXPECT_EQ(cfg.delta_max, 160u);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(Wsola, UnitFactorPreservesSignal) {
  AudioClip c = testing::NoiseClip(21, 16000, 0.2);
  const AudioClip y = TempoPerturb(c, 1.0);
  EXPECT_LE(std::abs(static_cast<long>(y.samples.size()) - 16000L), 640);
  EXPECT_GT(Ncc(y.samples, c.samples), 0.95);
}

TEST(Wsola, ToneKeepsPitchAndStretches) {
  const AudioClip c = Tone(440.0, 1.0);
  const AudioClip y = TempoPerturb(c, 0.8);
  EXPECT_NEAR(Seconds(y), 1.25, 1.25 * 0.02);
  EXPECT_NEAR(PeakFrequencyHz(y.samples, 16000), 440.0, 4.4);
  double peak = 0.0;
  for (double v : y.samples) peak = std::max(peak, std::abs(v));
  EXPECT_LE(peak, 1.0);
}

TEST(Wsola, DurationContractAcrossGuardBand) {
  const AudioClip c = Tone(300.0, 0.8);
  for (double a : {0.5, 0.65, 0.8, 0.9, 1.1, 1.5, 2.0}) {
    const AudioClip y = TempoPerturb(c, a);
    const double want = Seconds(c) / a;
    EXPECT_LT(std::abs(Seconds(y) - want) / want, 0.02) << "alpha " << a;
    EXPECT_NEAR(PeakFrequencyHz(y.samples, 16000), 300.0, 3.0) << "alpha " << a;
  }
}

TEST(Wsola, NoClippingOnFullScaleInput) {
  AudioClip c = Tone(180.0, 0.5, 16000, 0.999);
  for (double a : {0.7, 1.3}) {
    const AudioClip y = TempoPerturb(c, a);
    for (double v : y.samples) ASSERT_LE(std::abs(v), 1.0);
  }
}

TEST(Wsola, Rejections) {
  const AudioClip shortc = Tone(300.0, 0.01);
  EXPECT_THROW(TempoPerturb(shortc, 1.0), ValidationError);
  const AudioClip c = Tone(300.0, 0.2);
  EXPECT_THROW(TempoPerturb(c, 0.4), ValidationError);
  EXPECT_THROW(TempoPerturb(c, 2.5), ValidationError);
  WsolaConfig bad = WsolaConfig::ForSampleRate(16000);
  bad.synthesis_hop = bad.block_len + 1;
  EXPECT_THROW(bad.Validate(), ValidationError);
}

TEST(Speed, ShiftsPitchUnlikeTempo) {
  const AudioClip c = Tone(440.0, 1.0);
  const AudioClip s = SpeedPerturb(c, 0.9);
  const AudioClip t = TempoPerturb(c, 0.9);
  const double bin = 16000.0 / NextPowerOfTwo(s.samples.size());
  EXPECT_NEAR(PeakFrequencyHz(s.samples, 16000), 396.0, bin);
  EXPECT_NEAR(PeakFrequencyHz(t.samples, 16000), 440.0, 4.4);
}

TEST(Speed, LengthArithmetic) {
  const AudioClip c = Tone(440.0, 1.0);
  const AudioClip s = SpeedPerturb(c, 1.1);
  EXPECT_NEAR(static_cast<double>(s.samples.size()), 16000.0 / 1.1, 1.0);
  const AudioClip u = SpeedPerturb(c, 1.0);
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    ASSERT_LT(std::abs(u.samples[i] - c.samples[i]), 1e-6);
}

TEST(Alignment, ParseAndSpan) {
  const auto recs = ParseAlignments(
      "u1\tsil\t0.0\t0.1\nu1\tp01\t0.1\t0.3\nu1\tp02\t0.3\t0.4\n"
      "u1\tsil\t0.4\t0.6\n\nu2\tp03\t0.0\t0.2\n",
      "a.tsv");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].utterance_id, "u1");
  EXPECT_EQ(recs[0].entries.size(), 4u);
  const SpeechSpan s = NonSilenceSpan(recs[0], kDefaultSilenceLabels);
  EXPECT_DOUBLE_EQ(s.start_sec, 0.1);
  EXPECT_DOUBLE_EQ(s.end_sec, 0.4);
  EXPECT_EQ(ParseAlignments(FormatAlignments(recs), "b.tsv").size(), 2u);
}

void ExpectLineError(const std::string &text, const std::string &where) {
  try {
    ParseAlignments(text, "x.tsv");
    FAIL() << "accepted: " << text;
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
  }
}

TEST(Alignment, ErrorsNameLine) {
  ExpectLineError("u\tp\t0\t0.1\nu\tp\t0.1\n", "x.tsv:2");
  ExpectLineError("u\tp\t0\tabc\n", "x.tsv:1");
  ExpectLineError("u\tp\t0.2\t0.1\n", "x.tsv:1");
  ExpectLineError("u\tp\t0\t0.2\nu\tq\t0.1\t0.3\n", "x.tsv:2");
  ExpectLineError("u\tp\t-1\t0.2\n", "x.tsv:1");
}

AlignmentRecord Rec(const std::string &id, std::vector<PhoneSegment> segs) {
  return AlignmentRecord{id, std::move(segs)};
}

TEST(DurationStats, TwoValueMean) {
  const std::vector<AlignmentRecord> r = {
      Rec("u", {{"sil", 0.0, 0.05}, {"a", 0.05, 0.15}, {"b", 0.15, 0.35}})};
  const SpeakerDurationStats s = ComputeDurationStats("S", r);
  EXPECT_NEAR(s.mean_phone_dur_sec, 0.15, 1e-12);
  EXPECT_EQ(s.phone_count, 2u);
}

TEST(DurationStats, SilenceOnlyRejected) {
  const std::vector<AlignmentRecord> r = {Rec("u", {{"sil", 0.0, 0.5}, {"sp", 0.5, 0.6}})};
  EXPECT_THROW(ComputeDurationStats("S", r), ValidationError);
}

TEST(DurationStats, HundredRecordsMatchRecompute) {
  RandomStream rng(31);
  std::vector<AlignmentRecord> recs;
  double total = 0.0;
  std::size_t count = 0;
  for (int u = 0; u < 100; ++u) {
    AlignmentRecord r{"u" + std::to_string(u), {}};
    double t = 0.0;
    const int n = 2 + static_cast<int>(rng.Index(8));
    for (int k = 0; k < n; ++k) {
      const double d = rng.Uniform(0.03, 0.3);
      const bool sil = rng.Uniform() < 0.2;
      r.entries.push_back({sil ? "sil" : "p", t, t + d});
      if (!sil) {
        total += (t + d) - t;
        ++count;
      }
      t += d;
    }
    recs.push_back(std::move(r));
  }
  const SpeakerDurationStats s = ComputeDurationStats("S", recs);
  EXPECT_EQ(s.phone_count, count);
  EXPECT_NEAR(s.mean_phone_dur_sec, total / count, 1e-12);
}

SpeakerDurationStats Stats(const std::string &id, double mean) {
  return SpeakerDurationStats{id, mean, 10};
}

TEST(SdFactor, HandArithmetic) {
  const std::vector<SpeakerDurationStats> c = {Stats("C1", 0.10), Stats("C2", 0.12)};
  EXPECT_NEAR(SpeakerDependentFactor(c, Stats("D", 0.22)), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(SpeakerDependentFactor(c, Stats("D", 0.11)), 1.0);
}

TEST(SdFactor, PermutationAndScaleInvariant) {
  RandomStream rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SpeakerDurationStats> c;
    const int n = 1 + static_cast<int>(rng.Index(6));
    for (int i = 0; i < n; ++i) c.push_back(Stats("C" + std::to_string(i), rng.Uniform(0.05, 0.2)));
    const SpeakerDurationStats t = Stats("D", rng.Uniform(0.05, 0.4));
    const double f = SpeakerDependentFactor(c, t);
    auto p = c;
    rng.Shuffle(&p);
    EXPECT_EQ(SpeakerDependentFactor(p, t), f);
    const double k = rng.Uniform(0.5, 3.0);
    auto scaled = c;
    for (auto &s : scaled) s.mean_phone_dur_sec *= k;
    EXPECT_NEAR(SpeakerDependentFactor(scaled, Stats("D", t.mean_phone_dur_sec * k)), f,
                1e-12 * f);
  }
}

TEST(SdFactor, EmptyControlsRejected) {
  std::vector<SpeakerDurationStats> none;
  EXPECT_THROW(SpeakerDependentFactor(none, Stats("D", 0.1)), ValidationError);
}

TEST(PairwiseFactor, Examples) {
  EXPECT_DOUBLE_EQ(PairwiseMatchFactor(100, 200), 0.5);
  EXPECT_DOUBLE_EQ(PairwiseMatchFactor(70, 70), 1.0);
  EXPECT_DOUBLE_EQ(PairwiseMatchFactor(150, 100), 1.5);
  EXPECT_THROW(PairwiseMatchFactor(0, 10), ValidationError);
  EXPECT_THROW(PairwiseMatchFactor(10, 0), ValidationError);
}

}  // namespace
}  // namespace dysaug
