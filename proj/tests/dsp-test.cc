// tests/dsp-test.cc

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

#include <cmath>
#include <numbers>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"
#include "dysaug/base/random.h"
#include "dysaug/dsp/fft.h"
#include "dysaug/dsp/resample.h"
#include "dysaug/dsp/wav-io.h"
#include "dysaug/dsp/window.h"
#include "dysaug/dsp/xcorr.h"
#include "test-util.h"

namespace dysaug {
namespace {

using testing::DirectDft;
using testing::Ncc;
using testing::Tone;

TEST(Fft, ImpulseIsFlat) {
  std::vector<double> x(8, 0.0);
  x[0] = 1.0;
  for (const Complex &c : FftReal(x)) {
    EXPECT_NEAR(c.real(), 1.0, 1e-12);
    EXPECT_NEAR(c.imag(), 0.0, 1e-12);
  }
}

TEST(Fft, ConstantIsDcOnly) {
  std::vector<double> x(8, 1.0);
  const auto bins = FftReal(x);
  EXPECT_NEAR(bins[0].real(), 8.0, 1e-12);
  for (std::size_t k = 1; k < bins.size(); ++k) EXPECT_NEAR(std::abs(bins[k]), 0.0, 1e-12);
}

TEST(Fft, MatchesDirectDft) {
  RandomStream rng(3);
  std::vector<double> x(64);
  for (double &v : x) v = rng.Normal();
  const auto fast = FftReal(x);
  const auto slow = DirectDft(x);
  ASSERT_EQ(fast.size(), slow.size());
  for (std::size_t k = 0; k < fast.size(); ++k) EXPECT_LT(std::abs(fast[k] - slow[k]), 1e-9);
}

TEST(Fft, InverseRoundTrip) {
  RandomStream rng(4);
  for (std::size_t n : {2u, 16u, 512u}) {
    std::vector<double> x(n);
    for (double &v : x) v = rng.Normal();
    const auto y = InverseFftReal(FftReal(x), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y[i], x[i], 1e-9);
  }
}

TEST(Fft, RejectsNonPowerOfTwo) {
  std::vector<double> x(12, 0.0);
  try {
    FftReal(x);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("12"), std::string::npos) << e.what();
  }
}

TEST(Window, HannEndpointsAndPeak) {
  for (std::size_t len : {5u, 400u, 641u}) {
    const auto w = HannWindow(len);
    EXPECT_EQ(w.front(), 0.0);
    EXPECT_EQ(w.back(), 0.0);
    for (double v : w) EXPECT_LE(v, 1.0);
  }
}

TEST(CrossCorrelation, SelfPeaksAtZero) {
  RandomStream rng(5);
  std::vector<double> a(50);
  for (double &v : a) v = rng.Normal();
  EXPECT_EQ(CrossCorrelation(a, a, 5).best_lag, 0);
}

TEST(CrossCorrelation, DelayedSine) {
  std::vector<double> a(128), b(128);
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = std::sin(2.0 * std::numbers::pi * n / 32.0);
    b[n] = n >= 7 ? std::sin(2.0 * std::numbers::pi * (n - 7.0) / 32.0) : 0.0;
  }
  // Exhaustive scan as oracle.
  int best = 0;
  double best_score = -1e300;
  for (int lag : {0, -1, 1, -2, 2, -3, 3, -4, 4, -5, 5, -6, 6, -7, 7, -8, 8, -9, 9, -10, 10,
                  -11, 11, -12, 12, -13, 13, -14, 14, -15, 15, -16, 16}) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
      const long j = static_cast<long>(n) + lag;
      if (j >= 0 && j < static_cast<long>(b.size())) s += a[n] * b[j];
    }
    if (s > best_score) {
      best_score = s;
      best = lag;
    }
  }
  EXPECT_EQ(best, 7);
  EXPECT_EQ(CrossCorrelation(a, b, 16).best_lag, 7);
}

TEST(CrossCorrelation, ZerosTieBreakToZero) {
  std::vector<double> a(20, 0.0), b(20, 1.0);
  const XcorrResult r = CrossCorrelation(a, b, 5);
  EXPECT_EQ(r.best_lag, 0);
  EXPECT_EQ(r.best_score, 0.0);
}

TEST(CrossCorrelation, SymmetricForUniqueMaximum) {
  RandomStream rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(60), b(60);
    for (double &v : a) v = rng.Normal();
    for (double &v : b) v = rng.Normal();
    EXPECT_EQ(CrossCorrelation(a, b, 8).best_lag, -CrossCorrelation(b, a, 8).best_lag);
  }
}

TEST(CrossCorrelation, ParallelMatchesSerial) {
  RandomStream rng(7);
  std::vector<double> a(300), b(500);
  for (double &v : a) v = rng.Normal();
  for (double &v : b) v = rng.Normal();
  const XcorrResult p = CrossCorrelation(a, b, 90, 40);
  const XcorrResult s = reference::CrossCorrelation(a, b, 90, 40);
  EXPECT_EQ(p.best_lag, s.best_lag);
  EXPECT_EQ(p.best_score, s.best_score);
}

TEST(CrossCorrelation, RejectsEmpty) {
  std::vector<double> a, b(4, 1.0);
  EXPECT_THROW(CrossCorrelation(a, b, 2), ValidationError);
}

TEST(Resample, UnitRatioIsIdentity) {
  AudioClip c = testing::NoiseClip(8, 4000);
  const AudioClip r = Resample(c, 1.0);
  ASSERT_EQ(r.samples.size(), c.samples.size());
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    EXPECT_LT(std::abs(r.samples[i] - c.samples[i]), 1e-6);
}

TEST(Resample, ToneLengthAndPitch) {
  const AudioClip c = Tone(440.0, 1.0);
  const AudioClip r = Resample(c, 0.9);
  EXPECT_NEAR(static_cast<double>(r.samples.size()), 17778.0, 1.0);
  const double bin = 16000.0 / NextPowerOfTwo(r.samples.size());
  EXPECT_NEAR(PeakFrequencyHz(r.samples, 16000), 396.0, bin);
}

TEST(Resample, GlobalFactorsAccepted) {
  const AudioClip c = Tone(300.0, 0.2);
  EXPECT_NO_THROW(Resample(c, 0.9));
  EXPECT_NO_THROW(Resample(c, 1.1));
}

TEST(Resample, GuardBand) {
  const AudioClip c = Tone(300.0, 0.1);
  EXPECT_THROW(Resample(c, 0.49), ValidationError);
  EXPECT_THROW(Resample(c, 2.01), ValidationError);
  EXPECT_NO_THROW(Resample(c, 0.5));
  EXPECT_NO_THROW(Resample(c, 2.0));
}

TEST(Resample, RoundTripBandLimited) {
  AudioClip c;
  c.samples.resize(8000);
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    c.samples[i] = 0.3 * std::sin(2 * std::numbers::pi * 220.0 * i / 16000.0) +
                   0.2 * std::sin(2 * std::numbers::pi * 1330.0 * i / 16000.0);
  for (double r : {0.8, 0.9, 1.1, 1.25}) {
    const AudioClip back = Resample(Resample(c, r), 1.0 / r);
    EXPECT_LE(std::abs(static_cast<long>(back.samples.size()) -
                       static_cast<long>(c.samples.size())),
              2);
    EXPECT_GT(Ncc(back.samples, c.samples), 0.99) << "ratio " << r;
  }
}

TEST(Resample, ParallelMatchesSerialBitExactly) {
  const AudioClip c = testing::NoiseClip(9, 5000);
  for (double r : {0.7, 1.0, 1.3}) {
    const AudioClip p = Resample(c, r);
    const AudioClip s = reference::Resample(c, r);
    EXPECT_EQ(p.samples, s.samples);
  }
}

TEST(Wav, RoundTrip) {
  AudioClip c = testing::NoiseClip(10, 1000, 0.2);
  c.sample_rate_hz = 22050;
  const AudioClip back = ParseWav(EncodeWav(c), "mem");
  EXPECT_EQ(back.sample_rate_hz, 22050);
  ASSERT_EQ(back.samples.size(), c.samples.size());
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    EXPECT_NEAR(back.samples[i], c.samples[i], 1.0 / 32768.0);
  EXPECT_EQ(EncodeWav(back), EncodeWav(c));
}

std::string WithU16At(std::string bytes, std::size_t pos, std::uint16_t v) {
  bytes[pos] = static_cast<char>(v & 0xff);
  bytes[pos + 1] = static_cast<char>(v >> 8);
  return bytes;
}

TEST(Wav, RejectsStereoNamingChunk) {
  const std::string good = EncodeWav(testing::NoiseClip(11, 100));
  // Canonical layout: 'fmt ' payload starts at byte 20; channels at 22.
  try {
    ParseWav(WithU16At(good, 22, 2), "stereo.wav");
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("fmt "), std::string::npos) << e.what();
  }
  EXPECT_THROW(ParseWav(WithU16At(good, 20, 3), "float.wav"), ValidationError);
  EXPECT_THROW(ParseWav(WithU16At(good, 34, 24), "24bit.wav"), ValidationError);
  EXPECT_THROW(ParseWav("RIFX", "junk.wav"), ValidationError);
}

}  // namespace
}  // namespace dysaug
