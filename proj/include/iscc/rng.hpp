// Copyright 2026 The irs-iscc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISCC_RNG_HPP_
#define ISCC_RNG_HPP_

#include <complex>
#include <cstdint>
#include <string_view>

namespace iscc {

// Counter-based generator: draw i of a stream with key k is
// splitmix64_finalize(k + (i + 1) * 0x9E3779B97F4A7C15). Gaussian variates use
// the Marsaglia polar method so the sequence depends only on IEEE arithmetic,
// sqrt and log, never on a standard-library distribution implementation.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  // Circularly-symmetric complex Gaussian with unit variance.
  std::complex<double> complex_normal();

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64_finalize(std::uint64_t z);
std::uint64_t fnv1a64(std::string_view s);

// A seed from which independent, labelled streams are derived, one per
// consumer ("channels", "ue-placement", "randomization", ...).
struct RngSpec {
  std::uint64_t seed = 0;

  CounterRng stream(std::string_view label) const {
    return CounterRng(splitmix64_finalize(seed ^ fnv1a64(label)));
  }
};

}  // namespace iscc

#endif  // ISCC_RNG_HPP_
