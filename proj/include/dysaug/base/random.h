// base/random.h

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

#ifndef DYSAUG_BASE_RANDOM_H_
#define DYSAUG_BASE_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace dysaug {

inline constexpr std::uint64_t kDefaultSeed = 17;

// Seeded stream with platform-independent mappings.  The std:: distributions
// are implementation-defined, so uniform/normal draws are derived here
// directly from the mt19937_64 output, which the standard pins exactly.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t NextBits() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n).  Slight modulo bias is irrelevant for the
  // sizes used here (n << 2^64).
  std::size_t Index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }

  double Normal(double mean = 0.0, double stddev = 1.0) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    double u1 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    double u2 = Uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mean + stddev * r * std::cos(theta);
  }

  // Fisher-Yates with Index(), so the permutation is reproducible everywhere.
  template <typename T>
  void Shuffle(std::vector<T> *v) {
    for (std::size_t i = v->size(); i > 1; --i) {
      std::size_t j = Index(i);
      std::swap((*v)[i - 1], (*v)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 finalizer over (seed, stream); gives independent per-item
// streams whose values do not depend on processing order.
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace dysaug

#endif  // DYSAUG_BASE_RANDOM_H_
