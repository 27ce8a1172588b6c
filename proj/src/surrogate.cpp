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

#include "iscc/surrogate.hpp"

#include <cmath>

#include "iscc/metrics.hpp"

namespace iscc {

FpWeights weights_from(const SystemParams& p) {
  return {p.weight_radar, p.weight_ue};
}

FpWeights masked_weights(const SystemParams& p, const std::vector<int>& xi) {
  FpWeights w = weights_from(p);
  for (std::size_t k = 0; k < w.ue.size(); ++k) {
    if (!xi[k]) w.ue[k] = 0.0;
  }
  return w;
}

SurrogateTerms surrogate_terms(const BeamState& state, const ChannelRealization& ch,
                               const EffectiveChannels& eff, const SystemParams& p) {
  SurrogateTerms t;
  const std::size_t K = state.v.size();
  t.a_radar = ch.target_coeff * state.w.dot(ch.lambda_radar * state.x);
  t.b_radar = p.noise_var_w * state.w.squaredNorm() + std::norm(t.a_radar);
  for (std::size_t k = 0; k < K; ++k) {
    t.b_radar += std::norm(state.w.dot(eff.t_radar[k] * state.v[k]));
  }

  const Eigen::Index nc = ch.lambda_info.rows();
  const CVec echo = ch.target_coeff * (ch.lambda_info * state.x);
  t.b_info = p.noise_var_w * CMat::Identity(nc, nc);
  t.b_info.noalias() += echo * echo.adjoint();
  t.a_ue.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    t.a_ue.push_back(eff.t_info[k] * state.v[k]);
    t.b_info.noalias() += t.a_ue.back() * t.a_ue.back().adjoint();
  }
  // Rank-one accumulation can leave rounding-level skew.
  t.b_info = (0.5 * (t.b_info + t.b_info.adjoint())).eval();
  return t;
}

Sinrs compute_sinrs(const BeamState& state, const ChannelRealization& ch,
                    const EffectiveChannels& eff, const SystemParams& p) {
  Sinrs s;
  s.radar = sinr_radar(state, ch, eff, p);
  for (int k = 0; k < static_cast<int>(state.v.size()); ++k) {
    s.ue.push_back(sinr_ue(k, state, ch, eff, p));
  }
  return s;
}

AuxState update_aux(const SurrogateTerms& terms, const Sinrs& sinrs,
                    const FpWeights& weights) {
  AuxState aux;
  aux.alpha_radar = sinrs.radar;
  aux.beta_radar = std::sqrt(weights.radar * (1.0 + aux.alpha_radar)) *
                   terms.a_radar / terms.b_radar;

  const Eigen::LLT<CMat> llt(terms.b_info);
  if (llt.info() != Eigen::Success) {
    throw SolverError("update_aux: B_c is not positive definite");
  }
  const std::size_t K = terms.a_ue.size();
  aux.alpha_ue.resize(K);
  aux.beta_ue.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    aux.alpha_ue[k] = sinrs.ue[k];
    const double scale = std::sqrt(weights.ue[k] * (1.0 + aux.alpha_ue[k]));
    aux.beta_ue[k] = scale * llt.solve(terms.a_ue[k]);
  }
  return aux;
}

double surrogate_value(const AuxState& aux, const SurrogateTerms& terms,
                       const FpWeights& weights) {
  const double ar = aux.alpha_radar;
  double f = weights.radar * (std::log1p(ar) - ar);
  f += 2.0 * std::sqrt(weights.radar * (1.0 + ar)) *
       (std::conj(aux.beta_radar) * terms.a_radar).real();
  f -= std::norm(aux.beta_radar) * terms.b_radar;

  for (std::size_t k = 0; k < terms.a_ue.size(); ++k) {
    const double a = aux.alpha_ue[k];
    const CVec& beta = aux.beta_ue[k];
    f += weights.ue[k] * (std::log1p(a) - a);
    f += 2.0 * std::sqrt(weights.ue[k] * (1.0 + a)) * beta.dot(terms.a_ue[k]).real();
    f -= beta.dot(terms.b_info * beta).real();
  }
  return f;
}

double weighted_log_rate(const Sinrs& sinrs, const FpWeights& weights) {
  double f = weights.radar * std::log1p(sinrs.radar);
  for (std::size_t k = 0; k < sinrs.ue.size(); ++k) {
    f += weights.ue[k] * std::log1p(sinrs.ue[k]);
  }
  return f;
}

}  // namespace iscc
