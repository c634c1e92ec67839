// tools/dysaug.cc

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

// Command-line front end.  Exit status: 0 success, 2 invalid input, 1 any
// other failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"
#include "dysaug/dsp/wav-io.h"
#include "dysaug/features/fbank.h"
#include "dysaug/features/feature-io.h"
#include "dysaug/gan/checkpoint.h"
#include "dysaug/gan/grad-suite.h"
#include "dysaug/gan/pairs.h"
#include "dysaug/gan/trainer.h"
#include "dysaug/perturb/speed.h"
#include "dysaug/perturb/wsola.h"
#include "dysaug/pipeline/augment.h"
#include "dysaug/pipeline/corpus.h"
#include "dysaug/pipeline/manifest.h"
#include "dysaug/pipeline/spectrogram.h"
#include "dysaug/pipeline/synth-corpus.h"

namespace dysaug {
namespace {

namespace fs = std::filesystem;

struct PerturbArgs {
  double factor = 1.0;
  std::string in, out;
};

void AddPerturb(CLI::App &app, const char *name, const char *help, bool tempo,
                PerturbArgs *a) {
  CLI::App *cmd = app.add_subcommand(name, help);
  cmd->add_option("--factor", a->factor, "Perturbation factor (output = input / factor)")
      ->required();
  cmd->add_option("--in", a->in, "Input WAV")->required();
  cmd->add_option("--out", a->out, "Output WAV")->required();
  cmd->callback([a, tempo] {
    AudioClip clip = ReadWav(a->in);
    WriteWav(a->out, tempo ? TempoPerturb(clip, a->factor) : SpeedPerturb(clip, a->factor));
  });
}

// Both roles from a manifest, silence stripped via alignments.
struct LoadedCorpus {
  Manifest manifest;
  std::map<std::string, AlignmentRecord> alignments;
  std::vector<CorpusUtterance> control;
  std::vector<CorpusUtterance> target;
};

LoadedCorpus LoadForTarget(const std::string &manifest_path, const std::string &target) {
  LoadedCorpus c;
  c.manifest = ReadManifest(manifest_path);
  c.alignments = LoadAlignments(c.manifest);
  const auto ctl = c.manifest.WithRole(SpeakerRole::kControl);
  std::vector<const ManifestEntry *> tgt;
  for (const ManifestEntry *e : c.manifest.ForSpeaker(target))
    if (e->role == SpeakerRole::kDisordered) tgt.push_back(e);
  if (tgt.empty())
    ThrowValidation("manifest '", manifest_path, "' has no disordered utterances for speaker '",
                    target, "'");
  c.control = LoadUtterances(c.manifest, ctl, c.alignments);
  c.target = LoadUtterances(c.manifest, tgt, c.alignments);
  return c;
}

FbankMatrix LoadFeatures(const std::string &path) {
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".wav") return ExtractFbank(ReadWav(path));
  return ReadFbank(path);
}

int Run(int argc, char **argv) {
  CLI::App app{"Speech data augmentation: tempo/speed perturbation and spectral GANs"};
  app.require_subcommand(1);

  PerturbArgs tempo_args, speed_args;
  AddPerturb(app, "tempo", "WSOLA tempo perturbation of one WAV file", true, &tempo_args);
  AddPerturb(app, "speed", "Resampling speed perturbation of one WAV file", false, &speed_args);

  std::string factors_manifest;
  CLI::App *factors = app.add_subcommand(
      "factors", "Per-speaker mean phone durations and speaker-dependent factors (TSV)");
  factors->add_option("--manifest", factors_manifest, "Corpus manifest (JSON lines)")->required();
  factors->callback([&] {
    Manifest m = ReadManifest(factors_manifest);
    const auto al = LoadAlignments(m);
    const auto stats = SpeakerDurations(m, al);
    std::printf("speaker_id\trole\tmean_phone_dur_sec\tphone_count\tfactor\n");
    for (SpeakerRole role : {SpeakerRole::kControl, SpeakerRole::kDisordered}) {
      for (const std::string &spk : m.Speakers(role)) {
        auto it = stats.find(spk);
        if (it == stats.end()) continue;
        const double f = role == SpeakerRole::kDisordered ? SpeakerFactorFor(m, al, spk) : 1.0;
        std::printf("%s\t%s\t%.9g\t%zu\t%.9g\n", spk.c_str(), std::string(RoleName(role)).c_str(),
                    it->second.mean_phone_dur_sec, it->second.phone_count, f);
      }
    }
  });

  std::string fbank_in, fbank_out;
  bool fbank_text = false;
  CLI::App *fbank = app.add_subcommand("fbank", "40-bin log-mel filterbank of one WAV file");
  fbank->add_option("--in", fbank_in, "Input WAV")->required();
  fbank->add_option("--out", fbank_out, "Output feature file (FBK1, or text with --text)")
      ->required();
  fbank->add_flag("--text", fbank_text, "Write whitespace-separated text, one frame per line");
  fbank->callback([&] {
    const FbankMatrix mat = ExtractFbank(ReadWav(fbank_in));
    if (fbank_text)
      WriteFileBytes(fbank_out, FormatFbankText(mat));
    else
      WriteFbank(fbank_out, mat);
  });

  std::string pairs_manifest, pairs_target, pairs_mode = "tempo", pairs_out;
  std::uint64_t pairs_seed = kDefaultSeed;
  CLI::App *pairs = app.add_subcommand("pairs", "Duration-matched training pair index (TSV)");
  pairs->add_option("--manifest", pairs_manifest, "Corpus manifest")->required();
  pairs->add_option("--target-speaker", pairs_target, "Disordered speaker id")->required();
  pairs->add_option("--mode", pairs_mode, "tempo or speed")->capture_default_str();
  pairs->add_option("--seed", pairs_seed, "Subsampling seed")->capture_default_str();
  pairs->add_option("--out", pairs_out, "Output TSV (default: stdout)");
  pairs->callback([&] {
    LoadedCorpus c = LoadForTarget(pairs_manifest, pairs_target);
    PairBuildOptions opts;
    opts.mode = ParsePerturbMode(pairs_mode);
    opts.seed = pairs_seed;
    const PairSet ps = BuildPairs(c.control, c.target, opts);
    std::string tsv = "word_id\tcontrol_utt\ttarget_utt\tfactor\tframes\n";
    for (const TrainingPair &p : ps.pairs)
      tsv += StrCat(p.word_id, "\t", p.control_utt, "\t", p.target_utt, "\t", p.factor, "\t",
                    p.control_fbank.num_frames, "\n");
    if (pairs_out.empty())
      std::fputs(tsv.c_str(), stdout);
    else
      WriteFileBytes(pairs_out, tsv);
    std::fprintf(stderr, "pairs=%zu words_without_match=%zu out_of_range=%zu\n",
                 ps.pairs.size(), ps.words_without_match, ps.pairs_out_of_range);
  });

  std::string train_manifest, train_target, train_mode = "tempo", train_out;
  GanTrainConfig train_cfg;
  std::uint32_t train_crop = train_cfg.crop_frames;
  CLI::App *train = app.add_subcommand("train-gan", "Train one target speaker's GAN");
  train->add_option("--manifest", train_manifest, "Corpus manifest")->required();
  train->add_option("--target-speaker", train_target, "Disordered speaker id")->required();
  train->add_option("--mode", train_mode, "Pair perturbation: tempo or speed")
      ->capture_default_str();
  train->add_option("--iters", train_cfg.total_iters, "Training iterations")
      ->capture_default_str();
  train->add_option("--lr", train_cfg.initial_lr, "Initial learning rate")
      ->capture_default_str();
  train->add_option("--seed", train_cfg.seed, "Seed")->capture_default_str();
  train->add_option("--crop", train_crop, "Crop length in frames")->capture_default_str();
  train->add_option("--batch", train_cfg.batch, "Batch size")->capture_default_str();
  train->add_option("--out", train_out, "Checkpoint path")->required();
  train->callback([&] {
    train_cfg.crop_frames = train_crop;
    train_cfg.Validate();
    LoadedCorpus c = LoadForTarget(train_manifest, train_target);
    PairBuildOptions opts;
    opts.mode = ParsePerturbMode(train_mode);
    opts.seed = train_cfg.seed;
    const PairSet ps = BuildPairs(c.control, c.target, opts);
    const PairSplit split = SplitPairs(ps.pairs.size(), train_cfg.holdout_fraction,
                                       train_cfg.seed);
    const double base = MeanHeldoutL2(nullptr, ps.pairs, split.heldout);
    std::printf("pairs=%zu heldout=%zu identity_l2=%.6f\n", ps.pairs.size(),
                split.heldout.size(), base);
    std::printf("iter\tloss_d\tloss_g\theldout_l2\tlr\n");
    try {
      GanCheckpoint cp = TrainSpeakerGan(ps.pairs, train_target, train_cfg,
                                         [](const GanMetrics &m) {
                                           std::printf("%llu\t%.6f\t%.6f\t%.6f\t%.3g\n",
                                                       static_cast<unsigned long long>(m.iteration),
                                                       m.loss_d, m.loss_g, m.heldout_l2, m.lr);
                                           std::fflush(stdout);
                                         });
      WriteCheckpoint(train_out, cp);
      std::printf("checkpoint %s\n", CheckpointId(cp).c_str());
    } catch (const TrainingDiverged &e) {
      WriteCheckpoint(train_out, e.last_finite());
      throw;
    }
  });

  std::string aug_plan, aug_manifest;
  CLI::App *augment = app.add_subcommand("augment", "Run an augmentation plan (JSON)");
  augment->add_option("--plan", aug_plan, "AugmentationPlan JSON")->required();
  augment->add_option("--manifest", aug_manifest, "Corpus manifest")->required();
  augment->callback([&] {
    const AugmentationPlan plan = ReadPlan(aug_plan);
    const auto entries = RunAugmentation(ReadManifest(aug_manifest), plan);
    std::printf("wrote %zu feature files to %s\n", entries.size(),
                plan.output_dir.string().c_str());
  });

  SynthCorpusOptions synth_opts;
  std::string synth_out;
  CLI::App *synth = app.add_subcommand("synth-corpus", "Generate the synthetic corpus");
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--seed", synth_opts.seed, "Seed")->capture_default_str();
  synth->add_option("--n-control", synth_opts.n_control, "Control speakers")
      ->capture_default_str();
  synth->add_option("--n-target", synth_opts.n_target, "Disordered speakers")
      ->capture_default_str();
  synth->add_option("--n-words", synth_opts.n_words, "Words")->capture_default_str();
  synth->add_option("--utts-per-word", synth_opts.utts_per_word, "Repetitions per word")
      ->capture_default_str();
  synth->callback([&] {
    const Manifest m = SynthesizeCorpus(synth_opts, synth_out);
    std::printf("wrote %zu utterances to %s\n", m.entries.size(), synth_out.c_str());
  });

  std::string spec_in, spec_out, spec_format = "pgm";
  CLI::App *spec = app.add_subcommand("spectrogram", "Dump a spectrogram as CSV or PGM");
  spec->add_option("--in", spec_in, "WAV or FBK1 feature file")->required();
  spec->add_option("--out", spec_out, "Output file")->required();
  spec->add_option("--format", spec_format, "csv or pgm")->capture_default_str();
  spec->callback([&] {
    const SpectrogramFormat fmt = ParseSpectrogramFormat(spec_format);
    WriteSpectrogram(spec_out, LoadFeatures(spec_in), fmt);
  });

  std::uint64_t grad_seed = kDefaultSeed;
  CLI::App *grad = app.add_subcommand("gradcheck", "Finite-difference gradient suite");
  grad->add_option("--seed", grad_seed, "Seed")->capture_default_str();
  grad->callback([&] {
    bool ok = true;
    for (const GradCheckResult &r : RunGradientSuite(grad_seed)) {
      std::printf("%-36s max_rel_err=%.3e checked=%zu %s\n", r.name.c_str(), r.max_rel_error,
                  r.num_checked, r.passed ? "ok" : "FAIL");
      ok = ok && r.passed;
    }
    if (!ok) ThrowRuntime("gradient check failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace
}  // namespace dysaug

int main(int argc, char **argv) {
  try {
    return dysaug::Run(argc, argv);
  } catch (const dysaug::ValidationError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
