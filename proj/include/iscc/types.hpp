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

#ifndef ISCC_TYPES_HPP_
#define ISCC_TYPES_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace iscc {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Thrown for malformed or inconsistent configuration input. `key()` names the
// offending parameter when one can be identified.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Thrown when a numerical routine cannot produce a usable answer.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Strategy { kPartial, kBinary };

enum class Scheme { kJoint, kMrt, kAntenna, kReflective, kDiscrete4, kDiscrete8 };

std::string_view to_string(Strategy s);
std::string_view to_string(Scheme s);
Strategy parse_strategy(std::string_view name);
Scheme parse_scheme(std::string_view name);

// Block variables of the beamforming problem. For the IRS schemes v[k] has
// one entry per IRS element; for the active-antenna benchmark it has one entry
// per UE antenna.
struct BeamState {
  CVec x;               // BS transmit beamformer
  CVec w;               // radar receive combiner
  std::vector<CVec> v;  // per-UE information-bearing reflection vectors
};

// Communication time and per-UE local computing time, in seconds.
struct TimeAlloc {
  double t_comm = 0.0;
  std::vector<double> t_local;
};

// Binary offloading decision: xi[k] = 1 offloads, 0 computes locally. gamma
// holds the per-UE selection scores the decision was made from.
struct Schedule {
  std::vector<int> xi;
  std::vector<double> gamma;
};

// SINRs are linear; rates are bits/s (B * log2(1 + sinr)).
struct RateReport {
  double sinr_radar = 0.0;
  std::vector<double> sinr_ue;
  double rate_radar = 0.0;
  std::vector<double> rate_ue;
  std::vector<double> rate_local;
};

// Outcome of one optimization run.
struct WtcResult {
  std::string scheme;
  Strategy strategy = Strategy::kPartial;
  std::uint64_t seed = 0;

  // Problem-size summary used for tabulation.
  int n_elements = 0;
  double tx_power_dbw = 0.0;
  int n_tx = 0;
  int n_ue = 0;

  double wtc = 0.0;                 // weighted bits over the block
  double sum_rate_weighted = 0.0;   // bits/s multiplying t_comm in the WTC
  TimeAlloc time_alloc;
  std::optional<Schedule> schedule;  // binary strategy only
  std::vector<double> iteration_trace;
  bool converged = false;

  RateReport rates;
  BeamState beams;
};

}  // namespace iscc

#endif  // ISCC_TYPES_HPP_
