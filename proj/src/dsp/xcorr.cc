// dsp/xcorr.cc

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

#include "dysaug/dsp/xcorr.h"

#include <algorithm>
#include <vector>

#include "dysaug/base/errors.h"

namespace dysaug {
namespace {

void CheckArgs(std::span<const double> a, std::span<const double> b,
               int max_lag) {
  if (a.empty() || b.empty())
    ThrowValidation("CrossCorrelation: empty input (|a|=", a.size(),
                    ", |b|=", b.size(), ")");
  if (max_lag < 0)
    ThrowValidation("CrossCorrelation: max_lag must be >= 0, got ", max_lag);
}

double ScoreAt(std::span<const double> a, std::span<const double> b,
               std::ptrdiff_t offset) {
  // Restrict n so that 0 <= offset + n < |b|.
  const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(a.size());
  const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(b.size());
  std::ptrdiff_t lo = offset < 0 ? -offset : 0;
  std::ptrdiff_t hi = std::min(na, nb - offset);
  double s = 0.0;
  for (std::ptrdiff_t n = lo; n < hi; ++n) s += a[n] * b[offset + n];
  return s;
}

// Visit order 0, -1, +1, -2, +2, ...: the first strict maximum wins, which
// realises the tie-break rule.
int LagForRank(int rank) {
  if (rank == 0) return 0;
  const int mag = (rank + 1) / 2;
  return (rank % 2 == 1) ? -mag : mag;
}

}  // namespace

XcorrResult CrossCorrelation(std::span<const double> a,
                             std::span<const double> b, int max_lag,
                             std::ptrdiff_t b_origin) {
  CheckArgs(a, b, max_lag);
  const int n_lags = 2 * max_lag + 1;
  std::vector<double> scores(n_lags);
#pragma omp parallel for schedule(static)
  for (int rank = 0; rank < n_lags; ++rank)
    scores[rank] = ScoreAt(a, b, b_origin + LagForRank(rank));

  XcorrResult best{0, scores[0]};
  for (int rank = 1; rank < n_lags; ++rank) {
    if (scores[rank] > best.best_score) best = {LagForRank(rank), scores[rank]};
  }
  return best;
}

namespace reference {

XcorrResult CrossCorrelation(std::span<const double> a,
                             std::span<const double> b, int max_lag,
                             std::ptrdiff_t b_origin) {
  CheckArgs(a, b, max_lag);
  XcorrResult best{0, ScoreAt(a, b, b_origin)};
  for (int rank = 1; rank <= 2 * max_lag; ++rank) {
    const int lag = LagForRank(rank);
    const double s = ScoreAt(a, b, b_origin + lag);
    if (s > best.best_score) best = {lag, s};
  }
  return best;
}

}  // namespace reference
}  // namespace dysaug
