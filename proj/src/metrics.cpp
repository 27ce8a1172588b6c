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

#include "iscc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iscc {

double sinr_ue(int k, const BeamState& state, const ChannelRealization& ch,
               const EffectiveChannels& eff, const SystemParams& p) {
  const int nc = static_cast<int>(ch.lambda_info.rows());
  const CVec signal = eff.t_info[k] * state.v[k];
  if (signal.squaredNorm() == 0.0) return 0.0;

  const CVec echo = ch.target_coeff * (ch.lambda_info * state.x);
  CMat interference = p.noise_var_w * CMat::Identity(nc, nc);
  interference.noalias() += echo * echo.adjoint();
  for (std::size_t j = 0; j < state.v.size(); ++j) {
    if (static_cast<int>(j) == k) continue;
    const CVec a = eff.t_info[j] * state.v[j];
    interference.noalias() += a * a.adjoint();
  }
  const Eigen::LLT<CMat> llt(interference);
  if (llt.info() != Eigen::Success) {
    throw SolverError("sinr_ue: interference-plus-noise matrix not positive definite");
  }
  const double g = signal.dot(llt.solve(signal)).real();
  return std::max(g, 0.0);
}

double sinr_radar(const BeamState& state, const ChannelRealization& ch,
                  const EffectiveChannels& eff, const SystemParams& p) {
  const double w_sq = state.w.squaredNorm();
  if (w_sq == 0.0) throw SolverError("sinr_radar: receive combiner is zero");
  const cd target = ch.target_coeff * state.w.dot(ch.lambda_radar * state.x);
  double denom = p.noise_var_w * w_sq;
  for (std::size_t k = 0; k < state.v.size(); ++k) {
    denom += std::norm(state.w.dot(eff.t_radar[k] * state.v[k]));
  }
  return std::norm(target) / denom;
}

double shannon_rate(double sinr, double bandwidth_hz) {
  return bandwidth_hz * std::log2(1.0 + sinr);
}

RateReport compute_rates(const BeamState& state, const ChannelRealization& ch,
                         const EffectiveChannels& eff, const SystemParams& p) {
  RateReport r;
  r.sinr_radar = sinr_radar(state, ch, eff, p);
  r.rate_radar = shannon_rate(r.sinr_radar, p.bandwidth_hz);
  for (int k = 0; k < p.n_ue; ++k) {
    const double g = sinr_ue(k, state, ch, eff, p);
    r.sinr_ue.push_back(g);
    r.rate_ue.push_back(shannon_rate(g, p.bandwidth_hz));
    r.rate_local.push_back(p.cpu_freq_hz[k] / p.cycles_per_bit[k]);
  }
  return r;
}

double energy_ue(int k, double t_local, double t_comm, const SystemParams& p) {
  if (t_local < 0.0 || t_comm < 0.0) {
    throw std::invalid_argument("energy_ue: times must be nonnegative");
  }
  const double f = p.cpu_freq_hz[k];
  return t_local * p.energy_coeff[k] * f * f * f +
         t_comm * (p.n_elements * p.element_power_w);
}

double wtc(Strategy strategy, const TimeAlloc& times, std::span<const int> xi,
           const RateReport& rates, const SystemParams& p) {
  const bool binary = strategy == Strategy::kBinary;
  if (binary && static_cast<int>(xi.size()) != p.n_ue) {
    throw std::invalid_argument("wtc: binary strategy needs a schedule");
  }
  double total = p.weight_radar * times.t_comm * rates.rate_radar;
  for (int k = 0; k < p.n_ue; ++k) {
    const double comm = times.t_comm * rates.rate_ue[k];
    const double local = times.t_local[k] * rates.rate_local[k];
    if (binary) {
      total += p.weight_ue[k] * (xi[k] ? comm : local);
    } else {
      total += p.weight_ue[k] * (comm + local);
    }
  }
  return total;
}

double beam_violation(const BeamState& state, const SystemParams& p,
                      Scheme scheme) {
  double worst = 0.0;
  worst = std::max(worst, state.x.squaredNorm() / p.tx_power_w - 1.0);
  worst = std::max(worst, state.w.squaredNorm() - 1.0);
  for (const CVec& v : state.v) {
    if (scheme == Scheme::kAntenna) {
      worst = std::max(worst, v.squaredNorm() / p.ue_tx_power_w - 1.0);
    } else {
      for (Eigen::Index l = 0; l < v.size(); ++l) {
        worst = std::max(worst, std::norm(v(l)) - 1.0);
      }
    }
  }
  return worst;
}

}  // namespace iscc
