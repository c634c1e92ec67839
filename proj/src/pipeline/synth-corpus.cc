// pipeline/synth-corpus.cc

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

#include "dysaug/pipeline/synth-corpus.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numbers>

#include "json.hpp"

#include "dysaug/base/binary-io.h"
#include "dysaug/base/errors.h"
#include "dysaug/dsp/fft.h"
#include "dysaug/dsp/wav-io.h"
#include "dysaug/perturb/alignment.h"

namespace dysaug {
namespace {

constexpr std::size_t kInventorySize = 16;
constexpr double kControlBandwidthHz = 110.0;
constexpr double kDisorderedBandwidthHz = 400.0;
constexpr double kTiltPole = 0.6;
constexpr double kNoiseLowHz = 1000.0;
constexpr double kNoiseHighHz = 3000.0;
constexpr double kNoiseSnrDb = 25.0;
constexpr double kMaxHarmonicFraction = 0.45;  // of the sample rate
constexpr double kCrossfadeSec = 0.012;
constexpr double kRampSec = 0.015;
constexpr double kGain = 0.04;
constexpr double kSilenceNoise = 1e-4;
constexpr std::size_t kNumFormants = 4;
constexpr std::array<double, kNumFormants> kFormantGain = {1.0, 0.6, 0.35, 0.25};
constexpr double kSpectralFloor = 0.03;

struct PhoneProto {
  std::string label;
  std::array<double, kNumFormants> formants;
  double amp;
};

struct WordPhone {
  std::size_t proto;
  double dur_sec;
};

struct WordSpec {
  std::string word_id;
  std::vector<WordPhone> phones;
  double f0_start, f0_end;
};

std::vector<PhoneProto> MakeInventory(std::uint64_t seed) {
  RandomStream rng(MixSeed(seed, 1));
  std::vector<PhoneProto> inv;
  for (std::size_t i = 0; i < kInventorySize; ++i) {
    char label[32];
    std::snprintf(label, sizeof(label), "p%02zu", i);
    inv.push_back({label,
                   {rng.Uniform(300.0, 850.0), rng.Uniform(900.0, 2300.0),
                    rng.Uniform(2400.0, 3400.0), rng.Uniform(3600.0, 6200.0)},
                   rng.Uniform(0.5, 1.0)});
  }
  return inv;
}

std::vector<WordSpec> MakeWords(std::uint64_t seed, std::size_t n) {
  RandomStream rng(MixSeed(seed, 2));
  std::vector<WordSpec> words;
  for (std::size_t w = 0; w < n; ++w) {
    WordSpec spec;
    char id[32];
    std::snprintf(id, sizeof(id), "W%02zu", w + 1);
    spec.word_id = id;
    const std::size_t n_phones = 4 + rng.Index(3);
    for (std::size_t p = 0; p < n_phones; ++p)
      spec.phones.push_back({rng.Index(kInventorySize), rng.Uniform(0.10, 0.22)});
    spec.f0_start = rng.Uniform(115.0, 150.0);
    spec.f0_end = spec.f0_start * rng.Uniform(0.75, 0.95);
    words.push_back(std::move(spec));
  }
  return words;
}

struct UttPlan {
  std::string speaker_id;
  std::string utterance_id;
  const WordSpec *word;
  double duration_scale;
  double bandwidth_hz;
  const SynthDisorderedTruth *disorder;  // null for controls
  std::uint64_t stream;
};

struct RenderedUtt {
  AudioClip clip;
  AlignmentRecord alignment;
};

// Band-limited Gaussian noise by zeroing FFT bins outside [lo, hi].
std::vector<double> BandNoise(RandomStream *rng, std::size_t n, int sr, double lo, double hi) {
  const std::size_t size = NextPowerOfTwo(std::max<std::size_t>(n, 2));
  std::vector<double> white(size);
  for (double &x : white) x = rng->Normal();
  std::vector<Complex> bins = FftReal(white);
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const double hz = static_cast<double>(k) * sr / static_cast<double>(size);
    if (hz < lo || hz > hi) bins[k] = 0.0;
  }
  std::vector<double> out = InverseFftReal(bins, size);
  out.resize(n);
  double ss = 0.0;
  for (double x : out) ss += x * x;
  const double rms = std::sqrt(ss / static_cast<double>(std::max<std::size_t>(n, 1)));
  if (rms > 0.0)
    for (double &x : out) x /= rms;
  return out;
}

RenderedUtt Render(const UttPlan &plan, const std::vector<PhoneProto> &inv, int sr) {
  RandomStream rng(plan.stream);
  const double dur_jitter = 1.0 + rng.Uniform(-0.02, 0.02);
  const double f0_jitter = 1.0;
  const std::size_t lead = static_cast<std::size_t>(std::llround(rng.Uniform(0.10, 0.20) * sr));
  const std::size_t trail = static_cast<std::size_t>(std::llround(rng.Uniform(0.10, 0.20) * sr));

  const WordSpec &w = *plan.word;
  std::vector<std::size_t> bounds = {0};
  std::vector<std::array<double, kNumFormants>> formants;
  for (const WordPhone &p : w.phones) {
    const double d = p.dur_sec * plan.duration_scale * dur_jitter;
    bounds.push_back(bounds.back() + std::max<std::size_t>(1, std::llround(d * sr)));
    std::array<double, kNumFormants> f = inv[p.proto].formants;
    formants.push_back(f);
  }
  const std::size_t speech = bounds.back();
  const std::size_t total = lead + speech + trail;

  std::vector<double> x(total, 0.0);
  const double f0_max = std::max(w.f0_start, w.f0_end) * f0_jitter;
  const std::size_t n_harm = static_cast<std::size_t>(kMaxHarmonicFraction * sr / f0_max);
  std::vector<double> phase(n_harm + 1, 0.0);
  std::vector<double> amp(n_harm + 1, 0.0);
  const double xfade = kCrossfadeSec * sr;
  const double ramp = kRampSec * sr;
  constexpr std::size_t kBlock = 32;
  std::size_t phone = 0;
  for (std::size_t t = 0; t < speech; ++t) {
    while (t >= bounds[phone + 1]) ++phone;
    const double pos = static_cast<double>(t) / static_cast<double>(speech);
    const double f0 = (w.f0_start + (w.f0_end - w.f0_start) * pos) * f0_jitter;
    if (t % kBlock == 0) {
      // Formants and level interpolated across phone boundaries.
      std::array<double, kNumFormants> f = formants[phone];
      double level = inv[w.phones[phone].proto].amp;
      const double to_end = static_cast<double>(bounds[phone + 1] - t);
      if (phone + 1 < formants.size() && to_end < xfade) {
        const double mix = 0.5 * (1.0 - to_end / xfade);
        for (int k = 0; k < static_cast<int>(kNumFormants); ++k) f[k] += mix * (formants[phone + 1][k] - f[k]);
        level += mix * (inv[w.phones[phone + 1].proto].amp - level);
      }
      const double from_start = static_cast<double>(t - bounds[phone]);
      if (phone > 0 && from_start < xfade) {
        const double mix = 0.5 * (1.0 - from_start / xfade);
        for (int k = 0; k < static_cast<int>(kNumFormants); ++k) f[k] += mix * (formants[phone - 1][k] - f[k]);
        level += mix * (inv[w.phones[phone - 1].proto].amp - level);
      }
      for (std::size_t h = 1; h <= n_harm; ++h) {
        const double hz = h * f0;
        double a = kSpectralFloor;
        for (int k = 0; k < static_cast<int>(kNumFormants); ++k) {
          const double z = (hz - f[k]) / plan.bandwidth_hz;
          a += kFormantGain[k] * std::exp(-0.5 * z * z);
        }
        amp[h] = level * a;
      }
    }
    double s = 0.0;
    for (std::size_t h = 1; h <= n_harm; ++h) {
      phase[h] += 2.0 * std::numbers::pi * h * f0 / sr;
      if (phase[h] > 2.0 * std::numbers::pi) phase[h] -= 2.0 * std::numbers::pi;
      s += amp[h] * std::sin(phase[h]);
    }
    double env = 1.0;
    const double tt = static_cast<double>(t);
    if (tt < ramp) env = 0.5 - 0.5 * std::cos(std::numbers::pi * tt / ramp);
    const double back = static_cast<double>(speech - 1 - t);
    if (back < ramp) env = std::min(env, 0.5 - 0.5 * std::cos(std::numbers::pi * back / ramp));
    x[lead + t] = kGain * env * s;
  }
  for (double &v : x) v += kSilenceNoise * rng.Normal();

  if (plan.disorder) {
    const SynthDisorderedTruth &d = *plan.disorder;
    double y = 0.0;
    for (double &v : x) {
      y = (1.0 - d.tilt_pole) * v + d.tilt_pole * y;
      v = y;
    }
    double ss = 0.0;
    for (std::size_t t = lead; t < lead + speech; ++t) ss += x[t] * x[t];
    const double speech_rms = std::sqrt(ss / static_cast<double>(speech));
    const double noise_rms = speech_rms * std::pow(10.0, -d.noise_snr_db / 20.0);
    const std::vector<double> noise = BandNoise(&rng, total, sr, d.noise_low_hz, d.noise_high_hz);
    for (std::size_t t = 0; t < total; ++t) x[t] += noise_rms * noise[t];
  }
  for (double &v : x) v = std::clamp(v, -0.99, 0.99);

  RenderedUtt out;
  out.clip.samples = std::move(x);
  out.clip.sample_rate_hz = sr;
  out.clip.speaker_id = plan.speaker_id;
  out.clip.utterance_id = plan.utterance_id;
  out.alignment.utterance_id = plan.utterance_id;
  auto sec = [sr](std::size_t s) { return static_cast<double>(s) / sr; };
  out.alignment.entries.push_back({"sil", 0.0, sec(lead)});
  for (std::size_t p = 0; p < w.phones.size(); ++p)
    out.alignment.entries.push_back(
        {inv[w.phones[p].proto].label, sec(lead + bounds[p]), sec(lead + bounds[p + 1])});
  out.alignment.entries.push_back({"sil", sec(lead + speech), sec(total)});
  return out;
}

std::string SpeakerId(char prefix, std::size_t i) {
  char id[32];
  std::snprintf(id, sizeof(id), "%c%02zu", prefix, i + 1);
  return id;
}

}  // namespace

void SynthCorpusOptions::Validate() const {
  if (n_control == 0 || n_target == 0 || n_words == 0 || utts_per_word == 0)
    ThrowValidation("synth-corpus: all counts must be positive (control=", n_control,
                    ", target=", n_target, ", words=", n_words, ", utts=", utts_per_word, ")");
  if (n_words > 99 || n_control > 99 || n_target > 99)
    ThrowValidation("synth-corpus: at most 99 words and 99 speakers per role");
  if (sample_rate_hz < 11025)
    ThrowValidation("synth-corpus: sample rate ", sample_rate_hz,
                    " Hz is too low for the synthetic formants");
}

const std::vector<double> &SynthStretchFactors() {
  static const std::vector<double> kFactors = {0.8, 0.7, 0.9, 0.75, 0.85, 0.65, 0.95, 0.6};
  return kFactors;
}

Manifest SynthesizeCorpus(const SynthCorpusOptions &opts,
                          const std::filesystem::path &out_dir) {
  opts.Validate();
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "wav", ec);
  if (!ec) std::filesystem::create_directories(out_dir / "align", ec);
  if (ec)
    ThrowValidation("synth-corpus: cannot create output directory '", out_dir.string(),
                    "': ", ec.message());
  {
    const std::filesystem::path probe = out_dir / ".write-probe";
    std::ofstream f(probe);
    if (!f) ThrowValidation("synth-corpus: output directory '", out_dir.string(),
                            "' is not writable");
    f.close();
    std::filesystem::remove(probe, ec);
  }

  SynthTruth truth;
  truth.seed = opts.seed;
  truth.sample_rate_hz = opts.sample_rate_hz;
  truth.control_formant_bandwidth_hz = kControlBandwidthHz;
  // Symmetric rate offsets so the control mean equals the template.
  for (std::size_t i = 0; i < opts.n_control; ++i) {
    const double spread = opts.n_control == 1 ? 0.0
        : -0.08 + 0.16 * static_cast<double>(i) / static_cast<double>(opts.n_control - 1);
    truth.controls.push_back({SpeakerId('C', i), 1.0 + spread});
  }
  const std::vector<double> &alphas = SynthStretchFactors();
  for (std::size_t j = 0; j < opts.n_target; ++j)
    truth.disordered.push_back({SpeakerId('D', j), alphas[j % alphas.size()], kTiltPole,
                                kNoiseLowHz, kNoiseHighHz, kNoiseSnrDb,
                                kDisorderedBandwidthHz});

  const std::vector<PhoneProto> inv = MakeInventory(opts.seed);
  const std::vector<WordSpec> words = MakeWords(opts.seed, opts.n_words);

  std::vector<UttPlan> plans;
  std::uint64_t stream = 1000;
  auto add = [&](const std::string &spk, double scale, double bw,
                 const SynthDisorderedTruth *d) {
    for (const WordSpec &w : words)
      for (std::size_t r = 0; r < opts.utts_per_word; ++r)
        plans.push_back({spk, StrCat(spk, "_", w.word_id, "_", r + 1), &w, scale, bw, d,
                         MixSeed(opts.seed, stream++)});
  };
  for (const SynthControlTruth &c : truth.controls)
    add(c.speaker_id, c.duration_scale, kControlBandwidthHz, nullptr);
  for (const SynthDisorderedTruth &d : truth.disordered)
    add(d.speaker_id, 1.0 / d.stretch_alpha, d.formant_bandwidth_hz, &d);

  std::vector<RenderedUtt> rendered(plans.size());
  std::exception_ptr error;
  const long n = static_cast<long>(plans.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      rendered[i] = Render(plans[i], inv, opts.sample_rate_hz);
      WriteWav(out_dir / "wav" / (plans[i].utterance_id + ".wav"), rendered[i].clip);
    } catch (...) {
#pragma omp critical(dysaug_synth_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  Manifest m;
  m.base_dir = out_dir;
  std::map<std::string, std::vector<AlignmentRecord>> align_by_spk;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const UttPlan &p = plans[i];
    ManifestEntry e;
    e.utterance_id = p.utterance_id;
    e.speaker_id = p.speaker_id;
    e.word_id = p.word->word_id;
    e.role = p.disorder ? SpeakerRole::kDisordered : SpeakerRole::kControl;
    e.audio_path = "wav/" + p.utterance_id + ".wav";
    e.alignment_ref = "align/" + p.speaker_id + ".tsv";
    m.entries.push_back(std::move(e));
    align_by_spk[p.speaker_id].push_back(std::move(rendered[i].alignment));
  }
  for (const auto &kv : align_by_spk)
    WriteFileBytes(out_dir / "align" / (kv.first + ".tsv"), FormatAlignments(kv.second));
  WriteManifest(out_dir / "manifest.jsonl", m);
  WriteFileBytes(out_dir / "truth.json", FormatTruth(truth));
  return m;
}

std::string FormatTruth(const SynthTruth &t) {
  nlohmann::ordered_json j;
  j["seed"] = t.seed;
  j["sample_rate_hz"] = t.sample_rate_hz;
  j["control_formant_bandwidth_hz"] = t.control_formant_bandwidth_hz;
  j["controls"] = nlohmann::ordered_json::array();
  for (const SynthControlTruth &c : t.controls)
    j["controls"].push_back({{"speaker_id", c.speaker_id}, {"duration_scale", c.duration_scale}});
  j["disordered"] = nlohmann::ordered_json::array();
  for (const SynthDisorderedTruth &d : t.disordered)
    j["disordered"].push_back({{"speaker_id", d.speaker_id},
                               {"stretch_alpha", d.stretch_alpha},
                               {"tilt_pole", d.tilt_pole},
                               {"noise_low_hz", d.noise_low_hz},
                               {"noise_high_hz", d.noise_high_hz},
                               {"noise_snr_db", d.noise_snr_db},
                               {"formant_bandwidth_hz", d.formant_bandwidth_hz}});
  return j.dump(2) + "\n";
}

SynthTruth ParseTruth(const std::string &text, const std::string &name) {
  SynthTruth t;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    t.seed = j.at("seed").get<std::uint64_t>();
    t.sample_rate_hz = j.at("sample_rate_hz").get<int>();
    t.control_formant_bandwidth_hz = j.at("control_formant_bandwidth_hz").get<double>();
    for (const auto &c : j.at("controls"))
      t.controls.push_back({c.at("speaker_id").get<std::string>(),
                            c.at("duration_scale").get<double>()});
    for (const auto &d : j.at("disordered"))
      t.disordered.push_back({d.at("speaker_id").get<std::string>(),
                              d.at("stretch_alpha").get<double>(),
                              d.at("tilt_pole").get<double>(),
                              d.at("noise_low_hz").get<double>(),
                              d.at("noise_high_hz").get<double>(),
                              d.at("noise_snr_db").get<double>(),
                              d.at("formant_bandwidth_hz").get<double>()});
  } catch (const nlohmann::json::exception &e) {
    ThrowValidation(name, ": malformed truth file (", e.what(), ")");
  }
  return t;
}

SynthTruth ReadTruth(const std::filesystem::path &path) {
  return ParseTruth(ReadFileBytes(path), path.string());
}

}  // namespace dysaug
