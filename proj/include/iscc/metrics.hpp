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

#ifndef ISCC_METRICS_HPP_
#define ISCC_METRICS_HPP_

#include <span>

#include "iscc/channel.hpp"
#include "iscc/params.hpp"
#include "iscc/types.hpp"

namespace iscc {

// SINR of UE k at the information-receive array (MMSE-combined):
//   a^H (sigma^2 I + |eta|^2 Lc x x^H Lc^H + sum_{k' != k} a_k' a_k'^H)^{-1} a
// with a_k = t_info[k] v[k].
double sinr_ue(int k, const BeamState& state, const ChannelRealization& ch,
               const EffectiveChannels& eff, const SystemParams& params);

// Radar output SINR |eta w^H Lr x|^2 / (sum_k |w^H t_radar[k] v[k]|^2 +
// sigma^2 |w|^2). Throws SolverError when w = 0.
double sinr_radar(const BeamState& state, const ChannelRealization& ch,
                  const EffectiveChannels& eff, const SystemParams& params);

// B * log2(1 + sinr), bits/s.
double shannon_rate(double sinr, double bandwidth_hz);

RateReport compute_rates(const BeamState& state, const ChannelRealization& ch,
                         const EffectiveChannels& eff, const SystemParams& params);

// E_k = t_loc * eps_k * f_k^3 + t_comm * L * mu. Throws std::invalid_argument
// for negative times.
double energy_ue(int k, double t_local, double t_comm, const SystemParams& params);

// Weighted throughput capacity. Partial: w_r t_c R_r + sum_k w_k (t_c R_c,k +
// t_loc,k R_loc,k). Binary: the UE comm and local terms are gated by xi_k and
// 1 - xi_k. Throws std::invalid_argument if binary and `xi` is empty.
double wtc(Strategy strategy, const TimeAlloc& times, std::span<const int> xi,
           const RateReport& rates, const SystemParams& params);

// Largest relative violation of the C1-C3 constraints (0 when feasible).
double beam_violation(const BeamState& state, const SystemParams& params,
                      Scheme scheme = Scheme::kJoint);

}  // namespace iscc

#endif  // ISCC_METRICS_HPP_
