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

#ifndef ISCC_PARAMS_HPP_
#define ISCC_PARAMS_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace iscc {

// System parameters in linear units (W, s, Hz, m, rad). Decibel quantities
// are converted when the configuration is parsed and never appear here,
// except pl0_db which is a model constant expressed in dB by definition.
struct SystemParams {
  int n_tx = 4;         // BS transmit antennas
  int n_rx_radar = 4;   // BS radar-receive antennas
  int n_rx_info = 4;    // BS information-receive antennas
  int n_ue = 4;
  int n_elements = 64;  // IRS elements per UE
  int n_ue_antennas = 4;  // active antennas per UE, Antenna benchmark only

  double tx_power_w = 1.9952623149688795;  // 3 dBW
  double noise_var_w = 1e-4;               // -10 dBm
  double bandwidth_hz = 1e9;
  double weight_radar = 1.0;
  std::vector<double> weight_ue;

  double rician_k = 3.0;
  double pl0_db = -30.0;
  double ref_dist_m = 1.0;
  double radar_dist_m = 50.0;
  double ue_avg_dist_m = 50.0;

  std::vector<double> cpu_freq_hz;
  std::vector<double> cycles_per_bit;
  std::vector<double> energy_coeff;     // W / Hz^3
  std::vector<double> energy_budget_j;  // E_k^th

  double block_time_s = 100.0;
  double element_power_w = 1e-3;
  double antenna_spacing_wl = 0.5;
  double target_angle_rad = 0.0;
  double ue_tx_power_w = 2.5118864315095795e-4;  // -6 dBm

  // When set, energy_budget_j is derived from the other parameters as
  // 0.8 * (T * eps_k * f_k^3 + T * L * mu) and recomputed by refresh_derived().
  bool energy_budget_auto = true;

  bool operator==(const SystemParams&) const = default;
};

// Defaults for every parameter, with per-UE vectors sized for n_ue.
SystemParams default_params();

// Resizes all per-UE vectors to n_ue, broadcasting the first entry (or the
// default) into new slots, and recomputes derived quantities.
void set_ue_count(SystemParams& params, int n_ue);

// Recomputes energy_budget_j when energy_budget_auto is set.
void refresh_derived(SystemParams& params);

// Throws ConfigError naming the first violated parameter.
void validate(const SystemParams& params);

// Parses a `key = value [unit]` document onto `base`. Lines starting with '#'
// are comments. Per-UE keys accept a comma-separated list or a scalar that is
// broadcast to every UE. Power keys accept dBW/dBm/W/mW suffixes (or a
// `_dbw`/`_dbm` key suffix). The result is validated.
SystemParams load_params(std::string_view config_text,
                         SystemParams base = default_params());

SystemParams load_params_file(const std::filesystem::path& path,
                              SystemParams base = default_params());

// Applies `KEY=value` overrides, e.g. collected from the environment.
SystemParams apply_overrides(const std::map<std::string, std::string>& kv,
                             SystemParams base);

// Emits every parameter in canonical linear form; load_params() of the output
// reproduces `params` exactly.
std::string emit_params(const SystemParams& params);

double db_to_linear(double db);
double linear_to_db(double linear);
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }
inline double dbw_to_watts(double dbw) { return db_to_linear(dbw); }
inline double watts_to_dbw(double w) { return linear_to_db(w); }
inline double watts_to_dbm(double w) { return linear_to_db(w) + 30.0; }

}  // namespace iscc

#endif  // ISCC_PARAMS_HPP_
