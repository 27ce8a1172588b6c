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

#ifndef ISCC_CHANNEL_HPP_
#define ISCC_CHANNEL_HPP_

#include <vector>

#include <json.hpp>

#include "iscc/params.hpp"
#include "iscc/rng.hpp"
#include "iscc/types.hpp"

namespace iscc {

enum class ArrayKind { kTx, kRadarRx, kInfoRx };

// BS array response toward `angle`, normalized so every entry has modulus
// 1/N: entry n is exp(j 2 pi n d sin(angle)) / N.
struct SteeringVector {
  CVec entries;
  double angle = 0.0;
  ArrayKind kind = ArrayKind::kTx;
};

SteeringVector steering(ArrayKind kind, double angle, const SystemParams& params);

// Unit-modulus ULA response of `n` elements with spacing `spacing_wl`.
CVec ula_response(int n, double angle, double spacing_wl);

// Power gain 10^((PL0 - 25 log10(d / d0)) / 10). Throws std::invalid_argument
// for a nonpositive distance.
double path_loss_linear(double dist_m, const SystemParams& params);

// One draw of every random quantity of the system.
struct ChannelRealization {
  std::vector<CMat> h_bs_irs;     // [k] L x N_t
  std::vector<CMat> f_irs_info;   // [k] N_c x L
  std::vector<CMat> f_irs_radar;  // [k] N_r x L
  cd target_coeff;                // eta
  SteeringVector a_tx, a_radar, a_info;
  CMat lambda_radar;              // a_r a_t^T, N_r x N_t
  CMat lambda_info;               // a_c a_t^T, N_c x N_t
  std::vector<CMat> g_ue_direct;  // [k] N_c x N_a, Antenna benchmark
  std::vector<CMat> g_ue_radar;   // [k] N_r x N_a, Antenna benchmark
  std::vector<double> ue_distances_m;
};

// Draws all channels. Streams used: "ue-placement" (distances), "channels"
// (IRS links), "target" (eta phase), "antenna" (direct UE links). The IRS-side
// links of a seed do not depend on n_ue_antennas.
ChannelRealization draw_channels(const SystemParams& params, const RngSpec& rng);

// Rician matrix sqrt(gain) * (sqrt(k/(1+k)) * los + sqrt(1/(1+k)) * nlos)
// with los = a_rx(phi_rx) a_tx(phi_tx)^T built from unit-modulus ULA
// responses at uniformly drawn angles, and i.i.d. CN(0, 1) nlos entries.
CMat draw_rician(int rows, int cols, double gain, double rician_k,
                 double spacing_wl, CounterRng& rng);

// Per-UE cascaded channels for a given transmit beamformer:
// t_info[k] = F_c,k diag(H_k x), t_radar[k] = F_r,k diag(H_k x).
struct EffectiveChannels {
  std::vector<CMat> t_info;
  std::vector<CMat> t_radar;
};

EffectiveChannels effective_channels(const ChannelRealization& ch, const CVec& x);

// Direct UE-to-BS channels used in place of the cascaded IRS channels by the
// Antenna benchmark.
EffectiveChannels direct_channels(const ChannelRealization& ch);

// Regression-fixture dump: complex matrices as row-major arrays of [re, im].
nlohmann::json to_json(const CMat& m);
nlohmann::json to_json(const CVec& v);
nlohmann::json channels_to_json(const ChannelRealization& ch);

}  // namespace iscc

#endif  // ISCC_CHANNEL_HPP_
