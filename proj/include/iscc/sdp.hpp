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

#ifndef ISCC_SDP_HPP_
#define ISCC_SDP_HPP_

#include <string_view>
#include <vector>

#include <json.hpp>

#include "iscc/channel.hpp"
#include "iscc/rng.hpp"
#include "iscc/surrogate.hpp"
#include "iscc/types.hpp"

namespace iscc {

// Passive beamforming over the lifted variable V = [v; 1][v; 1]^H. For each
// UE the reflection-dependent part of the surrogate is
//   2 c_k Re{beta_k^H T_c,k v_k} - v_k^H G_k v_k,
//   G_k = |beta_r|^2 T_r,k^H w w^H T_r,k + T_c,k^H (sum_j beta_j beta_j^H) T_c,k,
// with c_k = sqrt(w_k (1 + a_k)), which equals Re Tr(C_k V_k) for
//   C_k = [ -G_k   c_k T_c,k^H beta_k ]
//         [  (.)^H          0         ].
// The relaxation drops rank(V_k) = 1 and keeps V_k >= 0, [V_k]_ll <= 1 and
// [V_k]_{L+1,L+1} = 1. The UEs decouple, so each is solved separately.

struct SdpObjective {
  std::vector<CMat> cost;  // [k] (L+1) x (L+1) Hermitian
};

SdpObjective assemble_sdp(const AuxState& aux, const BeamState& state,
                          const EffectiveChannels& eff, const FpWeights& weights);

// v^H C v for v = [v; 1].
double lifted_value(const CMat& cost, const CVec& v);

// Sum over UEs of the lifted values; the reflection-dependent part of the
// surrogate up to an additive constant.
double step3_value(const SdpObjective& obj, const std::vector<CVec>& v);

enum class SdpBackend {
  kBarrier,    // dual log-barrier path following with Newton centering
  kSplitting,  // alternating PSD / diagonal-box projections with dual updates
};

SdpBackend parse_sdp_backend(std::string_view name);
std::string_view to_string(SdpBackend backend);

struct SdpOptions {
  SdpBackend backend = SdpBackend::kBarrier;
  double gap_tol = 1e-8;        // barrier: duality gap on the normalized cost
  double residual_tol = 1e-7;   // splitting: primal / dual residuals
  int max_iters = 20000;        // splitting iterations or total Newton steps
};

struct SdpSolution {
  CMat v_hat;               // feasible: PSD, diag <= 1, last diag = 1
  double value = 0.0;       // Re Tr(C V)
  double upper_bound = 0.0; // dual objective; value <= optimum <= upper_bound
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
};

SdpSolution solve_sdp(const CMat& cost, const SdpOptions& options = {});

std::vector<SdpSolution> solve_sdp(const SdpObjective& obj,
                                   const SdpOptions& options = {});

struct Recovery {
  CVec v;
  double value = 0.0;
};

// Best of: the last column of v_hat, the scaled leading eigenvector, and
// `n_random` Gaussian draws from N(0, v_hat); each is divided by its last
// entry and clipped element-wise to |v_l| <= 1.
Recovery recover_rank_one(const CMat& v_hat, const CMat& cost, CounterRng& rng,
                          int n_random = 50);

// Rounds each phase to the nearest of `levels` uniform phases; magnitudes
// are unchanged.
CVec quantize_phases(const CVec& v, int levels);

nlohmann::json sdp_to_json(const SdpObjective& obj,
                           const std::vector<SdpSolution>& solutions);

}  // namespace iscc

#endif  // ISCC_SDP_HPP_
