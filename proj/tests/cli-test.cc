// tests/cli-test.cc

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

#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "dysaug/dsp/wav-io.h"
#include "dysaug/features/feature-io.h"
#include "test-util.h"

#ifndef DYSAUG_CLI_PATH
#error "DYSAUG_CLI_PATH must name the dysaug binary"
#endif

namespace dysaug {
namespace {

namespace fs = std::filesystem;

int RunCli(const std::string &args) {
  const std::string cmd = std::string(DYSAUG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::TempDir("cli");
    wav_ = (dir_ / "tone.wav").string();
    WriteWav(wav_, testing::Tone(440.0, 0.5));
  }
  fs::path dir_;
  std::string wav_;
};

TEST_F(CliTest, SuccessPaths) {
  const std::string out = (dir_ / "slow.wav").string();
  EXPECT_EQ(RunCli("tempo --factor 0.8 --in " + wav_ + " --out " + out), 0);
  EXPECT_NEAR(static_cast<double>(ReadWav(out).samples.size()), 10000.0, 200.0);
  EXPECT_EQ(RunCli("speed --factor 1.1 --in " + wav_ + " --out " + out), 0);
  const std::string fbk = (dir_ / "tone.fbk").string();
  EXPECT_EQ(RunCli("fbank --in " + wav_ + " --out " + fbk), 0);
  EXPECT_EQ(ReadFbank(fbk).num_frames, 48u);
  EXPECT_EQ(RunCli("spectrogram --in " + fbk + " --out " + (dir_ / "s.pgm").string() +
                " --format pgm"),
            0);
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
  const std::string out = (dir_ / "x.wav").string();
  EXPECT_EQ(RunCli("tempo --factor 3.0 --in " + wav_ + " --out " + out), 2);
  EXPECT_EQ(RunCli("speed --factor 1.0 --in " + (dir_ / "missing.wav").string() + " --out " + out),
            2);
  EXPECT_EQ(RunCli("spectrogram --in " + wav_ + " --out " + out + " --format png"), 2);
  EXPECT_EQ(RunCli("tempo --in " + wav_), 2);
  EXPECT_EQ(RunCli("no-such-command"), 2);
}

TEST_F(CliTest, RuntimeFailureExitsOne) {
  const std::string out = (fs::path(wav_) / "x.wav").string();
  EXPECT_EQ(RunCli("speed --factor 1.0 --in " + wav_ + " --out " + out), 1);
}

}  // namespace
}  // namespace dysaug
