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

#ifndef ISCC_BEAMFORMING_HPP_
#define ISCC_BEAMFORMING_HPP_

#include "iscc/channel.hpp"
#include "iscc/params.hpp"
#include "iscc/surrogate.hpp"
#include "iscc/types.hpp"

namespace iscc {

// min_u u^H mat u - 2 Re{u^H vec}  s.t.  ||u||^2 <= radius_sq,
// with mat Hermitian PSD.
struct QuadraticForm {
  CMat mat;
  CVec vec;
  double radius_sq = 1.0;
};

struct BallSolution {
  CVec point;
  double multiplier = 0.0;  // lambda in (lambda I + mat) u = vec
  int iterations = 0;
};

double quadratic_objective(const QuadraticForm& qf, const CVec& u);

// Solves the ball-constrained quadratic through the eigendecomposition of
// `mat`: u(lambda) = (lambda I + mat)^{-1} vec with the smallest lambda >= 0
// giving ||u||^2 <= radius_sq, found by bisection on the decreasing function
// ||u(lambda)||^2. When lambda = 0 is needed and `mat` is numerically
// singular, a ridge of 1e-12 * tr(mat) / dim is added.
BallSolution solve_ball_constrained(const QuadraticForm& qf);

// Transmit-beamformer subproblem for fixed auxiliaries, reflection vectors
// and radar combiner; radius_sq = P.
QuadraticForm assemble_x_form(const AuxState& aux, const BeamState& state,
                              const ChannelRealization& ch, const FpWeights& weights,
                              const SystemParams& params);

// Radar-combiner subproblem; radius_sq = 1.
//   p = sqrt(w_r (1 + a_r)) conj(b_r) eta Lr x
//   Q = |b_r|^2 (sigma^2 I + |eta|^2 Lr x x^H Lr^H
//                + sum_k T_r,k v_k v_k^H T_r,k^H)
// The sigma^2 I term comes from the noise part of B_r, which depends on w.
QuadraticForm assemble_w_form(const AuxState& aux, const BeamState& state,
                              const ChannelRealization& ch,
                              const EffectiveChannels& eff, const FpWeights& weights,
                              const SystemParams& params);

CVec update_x(const AuxState& aux, const BeamState& state,
              const ChannelRealization& ch, const FpWeights& weights,
              const SystemParams& params);

// Returns state.w unchanged when p = 0 (the w objective is then degenerate).
CVec update_w(const AuxState& aux, const BeamState& state,
              const ChannelRealization& ch, const EffectiveChannels& eff,
              const FpWeights& weights, const SystemParams& params);

}  // namespace iscc

#endif  // ISCC_BEAMFORMING_HPP_
