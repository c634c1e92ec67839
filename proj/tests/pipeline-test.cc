// tests/pipeline-test.cc

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
#include <filesystem>
#include <set>

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"
#include "dysaug/features/feature-io.h"
#include "dysaug/gan/checkpoint.h"
#include "dysaug/pipeline/augment.h"
#include "dysaug/pipeline/corpus.h"
#include "dysaug/pipeline/manifest.h"
#include "dysaug/pipeline/spectrogram.h"
#include "dysaug/pipeline/synth-corpus.h"
#include "test-util.h"

namespace dysaug {
namespace {

namespace fs = std::filesystem;

std::map<std::string, std::string> ReadTree(const fs::path &root) {
  std::map<std::string, std::string> files;
  for (const auto &e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file())
      files[fs::relative(e.path(), root).generic_string()] = ReadFileBytes(e.path());
  return files;
}

class SynthCorpusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root_ = new fs::path(testing::TempDir("pipeline"));
    manifest_ = new Manifest(SynthesizeCorpus({}, *root_ / "corpus"));
    RandomStream rng(5);
    GanCheckpoint cp = GanCheckpoint::Fresh("D01", kDefaultCropFrames, &rng, 2e-4);
    QuantizeToFloat(&cp);
    WriteCheckpoint((*root_ / "D01.ckpt").string(), cp);
  }
  static void TearDownTestSuite() {
    delete manifest_;
    delete root_;
  }

  AugmentationPlan Plan(AugmentMode mode, const std::string &out, double sd = 1.0,
                        std::size_t mult = 1) const {
    AugmentationPlan p;
    p.target_speaker_id = "D01";
    p.mode = mode;
    p.sd_factor = sd;
    p.multiplicity = mult;
    p.output_dir = *root_ / out;
    if (IsGanMode(mode)) p.checkpoint = *root_ / "D01.ckpt";
    return p;
  }

  static fs::path *root_;
  static Manifest *manifest_;
};

fs::path *SynthCorpusTest::root_ = nullptr;
Manifest *SynthCorpusTest::manifest_ = nullptr;

TEST_F(SynthCorpusTest, CountsAndTruth) {
  EXPECT_EQ(manifest_->entries.size(), 10u * 3u * 4u);
  EXPECT_EQ(manifest_->Speakers(SpeakerRole::kControl).size(), 2u);
  const SynthTruth truth = ReadTruth(*root_ / "corpus" / "truth.json");
  ASSERT_EQ(truth.disordered.size(), 2u);
  EXPECT_DOUBLE_EQ(truth.disordered[0].stretch_alpha, 0.8);
  const auto al = LoadAlignments(*manifest_);
  for (const SynthDisorderedTruth &d : truth.disordered)
    EXPECT_NEAR(SpeakerFactorFor(*manifest_, al, d.speaker_id), d.stretch_alpha, 0.01)
        << d.speaker_id;
}

TEST_F(SynthCorpusTest, SameSeedSameBytes) {
  SynthesizeCorpus({}, *root_ / "again");
  EXPECT_EQ(ReadTree(*root_ / "again"), ReadTree(*root_ / "corpus"));
  SynthCorpusOptions o;
  o.seed = 18;
  SynthesizeCorpus(o, *root_ / "other");
  EXPECT_NE(ReadTree(*root_ / "other"), ReadTree(*root_ / "corpus"));
}

TEST_F(SynthCorpusTest, UnwritableDirectoryRejected) {
  const fs::path file = *root_ / "plain-file";
  WriteFileBytes(file, "x");
  EXPECT_THROW(SynthesizeCorpus({}, file / "sub"), ValidationError);
  SynthCorpusOptions o;
  o.n_words = 0;
  EXPECT_THROW(SynthesizeCorpus(o, *root_ / "zero"), ValidationError);
}

TEST_F(SynthCorpusTest, UnitSpeedMatchesPlainFbank) {
  const auto out = RunAugmentation(*manifest_, Plan(AugmentMode::kSpeed, "speed1"));
  const auto al = LoadAlignments(*manifest_);
  const auto controls = manifest_->WithRole(SpeakerRole::kControl);
  const auto utts = LoadUtterances(*manifest_, controls, al);
  ASSERT_EQ(out.size(), utts.size());
  std::map<std::string, const CorpusUtterance *> by_id;
  for (const auto &u : utts) by_id[u.clip.utterance_id] = &u;
  for (const AugmentedEntry &e : out) {
    const FbankMatrix got = ReadFbank(*root_ / "speed1" / e.feature_path);
    const FbankMatrix want = ExtractFbank(by_id.at(e.source_utterance_id)->clip);
    ASSERT_EQ(got.num_frames, want.num_frames);
    for (std::size_t i = 0; i < got.values.size(); ++i)
      ASSERT_LE(std::abs(got.values[i] - want.values[i]) /
                    std::max(std::abs(want.values[i]), 1.0),
                1e-6)
          << e.utterance_id;
  }
}

TEST_F(SynthCorpusTest, GanModeShapesAndProvenance) {
  const auto out = RunAugmentation(*manifest_, Plan(AugmentMode::kTempoGan, "tgan", 0.8));
  EXPECT_EQ(out.size(), manifest_->WithRole(SpeakerRole::kControl).size());
  const std::string cp_id = CheckpointId(ReadCheckpoint((*root_ / "D01.ckpt").string()));
  std::set<std::string> paths;
  for (const AugmentedEntry &e : out) {
    const FbankMatrix m = ReadFbank(*root_ / "tgan" / e.feature_path);
    EXPECT_EQ(m.num_bins, 40u);
    EXPECT_GT(m.num_frames, 0u);
    EXPECT_EQ(e.provenance.mode, "tempo_gan");
    EXPECT_DOUBLE_EQ(e.provenance.factor, 0.8);
    EXPECT_EQ(e.provenance.checkpoint_id, cp_id);
    paths.insert(e.feature_path);
  }
  EXPECT_EQ(paths.size(), out.size());
  std::size_t files = 0;
  for (const auto &f : fs::directory_iterator(*root_ / "tgan" / "feats")) files += f.is_regular_file();
  EXPECT_EQ(files, out.size());
  const std::string text = ReadFileBytes(*root_ / "tgan" / std::string(kAugmentedManifestName));
  EXPECT_EQ(ParseAugmentedManifest(text, "aug"), out);
  EXPECT_EQ(FormatAugmentedManifest(ParseAugmentedManifest(text, "aug")), text);
}

TEST_F(SynthCorpusTest, DoubleMultiplicity) {
  const auto one = RunAugmentation(*manifest_, Plan(AugmentMode::kSpeed, "m1", 0.8, 1));
  const auto two = RunAugmentation(*manifest_, Plan(AugmentMode::kSpeed, "m2", 0.8, 2));
  EXPECT_EQ(two.size(), 2 * one.size());
  std::set<double> factors;
  for (const auto &e : two) factors.insert(e.provenance.factor);
  EXPECT_EQ(factors, (std::set<double>{0.8, 0.8 * 0.9}));
}

TEST_F(SynthCorpusTest, MissingCheckpointRejectedBeforeWork) {
  AugmentationPlan p = Plan(AugmentMode::kSpeedGan, "nockpt");
  p.checkpoint = *root_ / "absent.ckpt";
  EXPECT_THROW(RunAugmentation(*manifest_, p), ValidationError);
  EXPECT_FALSE(fs::exists(*root_ / "nockpt"));
  p.checkpoint.reset();
  EXPECT_THROW(p.Validate(), ValidationError);
  AugmentationPlan wrong = Plan(AugmentMode::kSpeedGan, "wrongspk");
  wrong.target_speaker_id = "D02";
  EXPECT_THROW(RunAugmentation(*manifest_, wrong), ValidationError);
}

TEST_F(SynthCorpusTest, EndToEndDeterminism) {
  RunAugmentation(*manifest_, Plan(AugmentMode::kSpeedGan, "det1", 0.7));
  RunAugmentation(*manifest_, Plan(AugmentMode::kSpeedGan, "det2", 0.7));
  EXPECT_EQ(ReadTree(*root_ / "det1"), ReadTree(*root_ / "det2"));
  // Re-running into the same directory overwrites identically.
  RunAugmentation(*manifest_, Plan(AugmentMode::kSpeedGan, "det1", 0.7));
  EXPECT_EQ(ReadTree(*root_ / "det1"), ReadTree(*root_ / "det2"));
}

TEST(Plan, JsonRoundTripAndFactors) {
  const AugmentationPlan p = ParsePlan(
      R"({"target_speaker_id":"D01","mode":"speed_gan","sd_factor":0.8,"multiplicity":2,)"
      R"("output_dir":"out","checkpoint":"ck/D01.ckpt"})",
      "plan.json", "/base");
  EXPECT_EQ(p.mode, AugmentMode::kSpeedGan);
  EXPECT_EQ(p.output_dir, fs::path("/base/out"));
  EXPECT_EQ(*p.checkpoint, fs::path("/base/ck/D01.ckpt"));
  EXPECT_EQ(p.CopyFactors(), (std::vector<double>{0.8, 0.8 * 0.9}));
  const AugmentationPlan q = ParsePlan(FormatPlan(p), "again", "/elsewhere");
  EXPECT_EQ(q.output_dir, p.output_dir);
  EXPECT_EQ(q.CopyFactors(), p.CopyFactors());
  EXPECT_THROW(ParsePlan(R"({"mode":"tempo"})", "bad", "/"), ValidationError);
  EXPECT_THROW(ParsePlan(R"({"target_speaker_id":"D","mode":"warp","sd_factor":1,"output_dir":"o"})",
                         "bad", "/"),
               ValidationError);
  AugmentationPlan far = p;
  far.sd_factor = 0.45;
  far.multiplicity = 1;
  EXPECT_THROW(far.CopyFactors(), ValidationError);
}

void ExpectManifestError(const std::string &text, const std::string &needle) {
  try {
    ParseManifest(text, "m.jsonl", "/", false);
    FAIL() << text;
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(Manifest, Errors) {
  const std::string a =
      R"({"utterance_id":"u1","speaker_id":"C01","word_id":"W","role":"control","audio_path":"a.wav"})";
  EXPECT_EQ(ParseManifest(a + "\n", "m.jsonl", "/", false).entries.size(), 1u);
  ExpectManifestError(a + "\n" + a + "\n", "m.jsonl:2");
  ExpectManifestError(R"({"utterance_id":"u1","role":"control","audio_path":"a.wav"})", "m.jsonl:1");
  ExpectManifestError(
      R"({"utterance_id":"u1","speaker_id":"C","word_id":"W","role":"patient","audio_path":"a"})",
      "patient");
  ExpectManifestError("{not json\n", "m.jsonl:1");
  try {
    ParseManifest(a, "m.jsonl", testing::TempDir("manifest"), true);
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("a.wav"), std::string::npos) << e.what();
  }
}

TEST(Manifest, FormatRoundTrip) {
  Manifest m;
  m.entries.push_back({"u1", "C01", "W01", SpeakerRole::kControl, "wav/u1.wav", "align/C01.tsv"});
  m.entries.push_back({"u2", "D01", "W01", SpeakerRole::kDisordered, "wav/u2.wav", std::nullopt});
  const std::string text = FormatManifest(m);
  EXPECT_EQ(FormatManifest(ParseManifest(text, "m", "/", false)), text);
}

std::vector<std::vector<int>> PgmPixels(const std::string &pgm, std::size_t *w, std::size_t *h) {
  std::istringstream in(pgm);
  std::string magic, comment;
  int maxval = 0;
  in >> magic;
  EXPECT_EQ(magic, "P5");
  in.get();
  std::getline(in, comment);
  EXPECT_EQ(comment.rfind("# min=", 0), 0u) << comment;
  in >> *w >> *h >> maxval;
  EXPECT_EQ(maxval, 255);
  in.get();
  std::vector<std::vector<int>> px(*h, std::vector<int>(*w));
  for (auto &row : px)
    for (int &v : row) v = static_cast<unsigned char>(in.get());
  EXPECT_TRUE(in.good());
  return px;
}

TEST(Spectrogram, ZeroClipSingleLevel) {
  AudioClip c;
  c.samples.assign(4000, 0.0);
  std::size_t w = 0, h = 0;
  const auto px = PgmPixels(FormatSpectrogramPgm(ExtractFbank(c)), &w, &h);
  EXPECT_EQ(h, 40u);
  EXPECT_EQ(w, 23u);
  std::set<int> levels;
  for (const auto &row : px) levels.insert(row.begin(), row.end());
  EXPECT_EQ(levels.size(), 1u);
}

TEST(Spectrogram, ToneBrightestRow) {
  const FbankMatrix m = ExtractFbank(testing::Tone(2000.0, 0.3));
  std::size_t bin = 0;
  for (std::size_t f = 1; f < 40; ++f)
    if (m.at(5, f) > m.at(5, bin)) bin = f;
  std::size_t w = 0, h = 0;
  const auto px = PgmPixels(FormatSpectrogramPgm(m), &w, &h);
  std::size_t best_row = 0;
  long best = -1;
  for (std::size_t r = 0; r < h; ++r) {
    long s = 0;
    for (int v : px[r]) s += v;
    if (s > best) {
      best = s;
      best_row = r;
    }
  }
  EXPECT_EQ(best_row, 39 - bin);
}

TEST(Spectrogram, CsvRoundTripAndFormats) {
  const FbankMatrix m = ExtractFbank(testing::NoiseClip(3, 3000));
  const FbankMatrix back = ParseSpectrogramCsv(FormatSpectrogramCsv(m), "csv");
  ASSERT_EQ(back.num_frames, m.num_frames);
  for (std::size_t i = 0; i < m.values.size(); ++i)
    EXPECT_NEAR(back.values[i], m.values[i], 1e-7 * std::abs(m.values[i]));
  EXPECT_EQ(ParseSpectrogramFormat("pgm"), SpectrogramFormat::kPgm);
  EXPECT_THROW(ParseSpectrogramFormat("png"), ValidationError);
}

}  // namespace
}  // namespace dysaug
