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

#ifndef ISCC_SURROGATE_HPP_
#define ISCC_SURROGATE_HPP_

#include <vector>

#include "iscc/channel.hpp"
#include "iscc/params.hpp"
#include "iscc/types.hpp"

namespace iscc {

// Fractional-programming surrogate of the weighted sum of log(1 + SINR).
//
// With the Lagrangian dual transform each log(1 + g) becomes
//   log(1 + a) - a + (1 + a) g / (1 + g),
// and the quadratic transform replaces each resulting ratio |A|^2 / B by
//   2 sqrt(c) Re{b^* A} - b^* B b,   c = w (1 + a).
// For fixed beams the surrogate is jointly maximized by a = g and
// b = sqrt(c) B^{-1} A, where it equals the weighted log-sum exactly.
// Logarithms here are natural.

// Objective weights; the binary pipeline passes w_k * xi_k for the UEs.
struct FpWeights {
  double radar = 1.0;
  std::vector<double> ue;
};

FpWeights weights_from(const SystemParams& params);
FpWeights masked_weights(const SystemParams& params, const std::vector<int>& xi);

struct AuxState {
  double alpha_radar = 0.0;
  std::vector<double> alpha_ue;
  cd beta_radar = 0.0;
  std::vector<CVec> beta_ue;
};

// Numerators and denominators of the two ratio shapes. b_radar and b_info
// include the desired signal, so |A|^2 / B = g / (1 + g).
struct SurrogateTerms {
  cd a_radar = 0.0;
  double b_radar = 0.0;
  std::vector<CVec> a_ue;
  CMat b_info;
};

struct Sinrs {
  double radar = 0.0;
  std::vector<double> ue;
};

SurrogateTerms surrogate_terms(const BeamState& state, const ChannelRealization& ch,
                               const EffectiveChannels& eff,
                               const SystemParams& params);

Sinrs compute_sinrs(const BeamState& state, const ChannelRealization& ch,
                    const EffectiveChannels& eff, const SystemParams& params);

AuxState update_aux(const SurrogateTerms& terms, const Sinrs& sinrs,
                    const FpWeights& weights);

double surrogate_value(const AuxState& aux, const SurrogateTerms& terms,
                       const FpWeights& weights);

// sum_k w_k log(1 + g_k) + w_r log(1 + g_r), natural log.
double weighted_log_rate(const Sinrs& sinrs, const FpWeights& weights);

}  // namespace iscc

#endif  // ISCC_SURROGATE_HPP_
