// tests/gan-test.cc

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
#include <set>

#include "dysaug/base/errors.h"
#include "dysaug/base/random.h"
#include "dysaug/gan/checkpoint.h"
#include "dysaug/gan/generate.h"
#include "dysaug/gan/grad-suite.h"
#include "dysaug/gan/networks.h"
#include "dysaug/gan/pairs.h"
#include "dysaug/gan/trainer.h"
#include "test-util.h"

namespace dysaug {
namespace {

FbankMatrix RandomFbank(std::uint64_t seed, std::size_t t, const std::string &spk = "S") {
  RandomStream rng(seed);
  FbankMatrix m(t, kNumMelBins);
  for (double &v : m.values) v = rng.Normal();
  m.speaker_id = spk;
  return m;
}

TEST(Generator, PreservesShape) {
  RandomStream rng(1);
  Generator g;
  g.Init(&rng);
  for (std::size_t t : {1u, 7u, 64u, 501u}) {
    const FbankMatrix y = RunGenerator(g, RandomFbank(t, t));
    EXPECT_EQ(y.num_frames, t);
    EXPECT_EQ(y.num_bins, kNumMelBins);
  }
}

TEST(Discriminator, SpatialContract) {
  RandomStream rng(2);
  Discriminator d(kNumMelBins, 64);
  d.Init(&rng);
  EXPECT_EQ(d.reduced_freq(), 2u);
  EXPECT_EQ(d.reduced_time(), 4u);
  EXPECT_EQ(d.FlattenSize(), 512u);
  EXPECT_EQ(d.fc.in_features, 512u);
  Tensor4 x({3, 1, 40, 64});
  for (double &v : x.data()) v = rng.Normal(0.0, 3.0);
  for (double p : d.Forward(x)) {
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
  }
  EXPECT_THROW(d.Forward(Tensor4({1, 1, 40, 63})), ValidationError);
  EXPECT_THROW(d.Forward(Tensor4({1, 1, 39, 64})), ValidationError);
}

TEST(Schedule, ClosedForm) {
  const double eta = 2e-4;
  EXPECT_EQ(LearningRateAt(eta, 0), eta);
  EXPECT_EQ(LearningRateAt(eta, 2499), eta);
  EXPECT_EQ(LearningRateAt(eta, 2500), eta / 2);
  EXPECT_EQ(LearningRateAt(eta, 5000), eta / 4);
  RandomStream rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t it = rng.Index(100000);
    EXPECT_DOUBLE_EQ(LearningRateAt(eta, it), eta * std::pow(0.5, static_cast<double>(it / 2500)));
  }
}

TEST(Split, DisjointSortedCovering) {
  for (std::size_t n : {2u, 10u, 37u, 180u}) {
    const PairSplit s = SplitPairs(n, 0.1, 17);
    EXPECT_GE(s.heldout.size(), 1u);
    EXPECT_GE(s.train.size(), 1u);
    EXPECT_TRUE(std::is_sorted(s.train.begin(), s.train.end()));
    EXPECT_TRUE(std::is_sorted(s.heldout.begin(), s.heldout.end()));
    std::set<std::size_t> all(s.train.begin(), s.train.end());
    all.insert(s.heldout.begin(), s.heldout.end());
    EXPECT_EQ(all.size(), n);
  }
}

GanCheckpoint SmallCheckpoint() {
  RandomStream rng(4);
  return GanCheckpoint::Fresh("D01", 64, &rng, 2e-4);
}

TEST(Checkpoint, RoundTripBitExact) {
  GanCheckpoint cp = SmallCheckpoint();
  QuantizeToFloat(&cp);
  const std::string bytes = EncodeCheckpoint(cp);
  EXPECT_EQ(bytes.substr(0, 4), "DGAN");
  const GanCheckpoint back = DecodeCheckpoint(bytes, "mem");
  EXPECT_EQ(back.target_speaker_id, "D01");
  EXPECT_EQ(back.crop_frames, 64u);
  EXPECT_EQ(EncodeCheckpoint(back), bytes);
  EXPECT_EQ(CheckpointId(back), CheckpointId(cp));
  const auto a = cp.generator.Parameters();
  const auto b = back.generator.Parameters();
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i]->value, b[i]->value);
}

TEST(Checkpoint, CorruptionRejected) {
  const std::string bytes = EncodeCheckpoint(SmallCheckpoint());
  std::string bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(DecodeCheckpoint(bad, "magic"), ValidationError);
  bad = bytes;
  bad[4] = 9;  // version
  EXPECT_THROW(DecodeCheckpoint(bad, "version"), ValidationError);
  bad = bytes;
  bad[4 + 4 + 4 + 3] = 32;  // crop frames: discriminator fc no longer fits
  try {
    DecodeCheckpoint(bad, "shape");
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("shape"), std::string::npos) << e.what();
  }
  EXPECT_THROW(DecodeCheckpoint(bytes + "x", "trailing"), ValidationError);
  EXPECT_THROW(DecodeCheckpoint(bytes.substr(0, bytes.size() - 3), "short"), ValidationError);
}

std::vector<TrainingPair> RandomPairs(std::size_t n) {
  std::vector<TrainingPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    TrainingPair p;
    p.control_fbank = RandomFbank(10 + i, 20 + i);
    p.target_fbank = RandomFbank(100 + i, 20 + i);
    p.word_id = "W";
    pairs.push_back(std::move(p));
  }
  return pairs;
}

TEST(Trainer, SameSeedSameBytes) {
  const auto pairs = RandomPairs(6);
  GanTrainConfig cfg;
  cfg.total_iters = 12;
  cfg.batch = 2;
  cfg.crop_frames = 16;
  cfg.log_every = 4;
  std::vector<GanMetrics> seen;
  const GanCheckpoint a = TrainSpeakerGan(pairs, "D01", cfg, [&](const GanMetrics &m) {
    seen.push_back(m);
  });
  const GanCheckpoint b = TrainSpeakerGan(pairs, "D01", cfg);
  EXPECT_EQ(EncodeCheckpoint(a), EncodeCheckpoint(b));
  EXPECT_EQ(a.iteration, 12u);
  ASSERT_FALSE(seen.empty());
  for (const GanMetrics &m : seen) {
    EXPECT_TRUE(std::isfinite(m.loss_d));
    EXPECT_TRUE(std::isfinite(m.loss_g));
  }
  cfg.seed = 18;
  EXPECT_NE(EncodeCheckpoint(TrainSpeakerGan(pairs, "D01", cfg)), EncodeCheckpoint(a));
}

TEST(Trainer, ConfigValidation) {
  GanTrainConfig cfg;
  cfg.crop_frames = 8;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg = GanTrainConfig{};
  cfg.batch = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
}

CorpusUtterance Utt(const std::string &spk, const std::string &id, const std::string &word,
                    std::size_t frames, std::uint64_t seed) {
  CorpusUtterance u;
  u.clip = testing::NoiseClip(seed, 400 + (frames - 1) * 160, 0.2);
  u.clip.speaker_id = spk;
  u.clip.utterance_id = id;
  u.word_id = word;
  return u;
}

TEST(Pairs, FullCrossProduct) {
  const std::vector<CorpusUtterance> c = {Utt("C1", "c1", "W1", 60, 1), Utt("C1", "c2", "W1", 62, 2),
                                          Utt("C2", "c3", "W1", 58, 3), Utt("C2", "c4", "W9", 60, 4)};
  const std::vector<CorpusUtterance> t = {Utt("D", "t1", "W1", 70, 5), Utt("D", "t2", "W1", 75, 6)};
  const PairSet ps = BuildPairs(c, t, PairBuildOptions{});
  EXPECT_EQ(ps.pairs.size(), 6u);
  EXPECT_EQ(ps.words_without_match, 1u);
  for (const TrainingPair &p : ps.pairs) {
    EXPECT_EQ(p.control_fbank.num_frames, p.target_fbank.num_frames);
    EXPECT_EQ(p.control_fbank.num_bins, kNumMelBins);
  }
}

TEST(Pairs, SpeedDurationArithmetic) {
  const std::vector<CorpusUtterance> c = {Utt("C1", "c1", "W1", 100, 7)};
  const std::vector<CorpusUtterance> t = {Utt("D", "t1", "W1", 200, 8)};
  PairBuildOptions o;
  o.mode = PerturbMode::kSpeed;
  const PairSet ps = BuildPairs(c, t, o);
  ASSERT_EQ(ps.pairs.size(), 1u);
  EXPECT_DOUBLE_EQ(ps.pairs[0].factor, 0.5);
  const AudioClip perturbed = ApplyPerturbation(c[0].clip, 0.5, PerturbMode::kSpeed);
  EXPECT_NEAR(static_cast<double>(ExtractFbank(perturbed).num_frames), 200.0, 2.0);
  EXPECT_EQ(ps.pairs[0].control_fbank.num_frames, 200u);
}

TEST(Pairs, IdenticalClipsGiveEqualMatrices) {
  CorpusUtterance a = Utt("C1", "c1", "W1", 80, 9);
  CorpusUtterance b = a;
  b.clip.speaker_id = "D";
  b.clip.utterance_id = "t1";
  PairBuildOptions o;
  o.mode = PerturbMode::kSpeed;
  const PairSet ps = BuildPairs(std::span(&a, 1), std::span(&b, 1), o);
  ASSERT_EQ(ps.pairs.size(), 1u);
  EXPECT_EQ(ps.pairs[0].factor, 1.0);
  const auto &x = ps.pairs[0].control_fbank.values, &y = ps.pairs[0].target_fbank.values;
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], y[i], 1e-4);
}

TEST(Pairs, EmptyResultRejected) {
  const std::vector<CorpusUtterance> c = {Utt("C1", "c1", "W1", 60, 1)};
  const std::vector<CorpusUtterance> t = {Utt("D", "t1", "W2", 60, 2)};
  EXPECT_THROW(BuildPairs(c, t, PairBuildOptions{}), ValidationError);
  const std::vector<CorpusUtterance> mixed = {Utt("D", "t1", "W1", 60, 2), Utt("E", "t2", "W1", 60, 3)};
  EXPECT_THROW(BuildPairs(c, mixed, PairBuildOptions{}), ValidationError);
}

TEST(Generate, ZeroWeightsGiveZero) {
  GanCheckpoint cp = SmallCheckpoint();
  for (Parameter *p : cp.generator.Parameters()) std::fill(p->value.begin(), p->value.end(), 0.0);
  const FbankMatrix in = RandomFbank(11, 33);
  const SpeakerNormStats st = AccumulateNormStats(std::span(&in, 1));
  const FbankMatrix out = GenerateRaw(cp, in, st);
  EXPECT_EQ(out.num_frames, 33u);
  for (double v : out.values) EXPECT_EQ(v, 0.0);
}

TEST(Generate, RejectsWrongBinCount) {
  const GanCheckpoint cp = SmallCheckpoint();
  FbankMatrix in(10, 23);
  in.speaker_id = "S";
  SpeakerNormStats st{"S", std::vector<double>(23, 0.0), std::vector<double>(23, 1.0), 10};
  EXPECT_THROW(GenerateRaw(cp, in, st), ValidationError);
}

TEST(Generate, SetKeepsLengthsAndNormalizes) {
  const GanCheckpoint cp = SmallCheckpoint();
  std::vector<FbankMatrix> in = {RandomFbank(12, 30, "C1"), RandomFbank(13, 45, "C2")};
  std::vector<SpeakerNormStats> st = {AccumulateNormStats(std::span(&in[0], 1)),
                                      AccumulateNormStats(std::span(&in[1], 1))};
  const auto out = GenerateSet(cp, in, st);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].num_frames, 30u);
  EXPECT_EQ(out[1].num_frames, 45u);
  EXPECT_EQ(out[1].speaker_id, "C2");
  double sum = 0.0;
  for (const auto &m : out)
    for (std::size_t t = 0; t < m.num_frames; ++t) sum += m.at(t, 5);
  EXPECT_NEAR(sum / 75.0, 0.0, 1e-8);
}

TEST(GradientSuite, AllChecksPass) {
  const auto results = RunGradientSuite();
  EXPECT_GE(results.size(), 10u);
  for (const GradCheckResult &r : results) {
    EXPECT_TRUE(r.passed) << r.name << " max rel error " << r.max_rel_error;
    EXPECT_GT(r.num_checked, 0u) << r.name;
  }
}

}  // namespace
}  // namespace dysaug
