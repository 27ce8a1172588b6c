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


#include "iscc/ao.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iscc/beamforming.hpp"
#include "iscc/metrics.hpp"
#include "iscc/scheduler.hpp"
#include "iscc/surrogate.hpp"

namespace iscc {

namespace {

struct SchemeTraits {
  bool free_beams = true;   // x and w optimized
  bool free_v = true;       // reflection / transmit vectors optimized
  bool antenna = false;     // direct channels with a sum-power cap on v
  int levels = 0;           // phase quantization, 0 = continuous
};

SchemeTraits traits_of(Scheme s) {
  switch (s) {
    case Scheme::kJoint: return {};
    case Scheme::kMrt: return {false, true, false, 0};
    case Scheme::kAntenna: return {false, true, true, 0};
    case Scheme::kReflective: return {false, false, false, 0};
    case Scheme::kDiscrete4: return {true, true, false, 4};
    case Scheme::kDiscrete8: return {true, true, false, 8};
  }
  return {};
}

EffectiveChannels channels_for(const SchemeTraits& tr, const ChannelRealization& ch,
                               const CVec& x) {
  return tr.antenna ? direct_channels(ch) : effective_channels(ch, x);
}

// Leading eigenvector of T^H T with every entry at magnitude `mag`.
CVec matched_phases(const CMat& t, double mag) {
  const Eigen::SelfAdjointEigenSolver<CMat> es(t.adjoint() * t);
  const CVec u = es.eigenvectors().col(es.eigenvectors().cols() - 1);
  CVec v(u.size());
  for (Eigen::Index l = 0; l < u.size(); ++l) {
    v(l) = std::abs(u(l)) > 0.0 ? std::polar(mag, std::arg(u(l))) : cd(mag);
  }
  return v;
}

struct Evaluation {
  Sinrs sinrs;
  double value = 0.0;  // weighted natural-log rate
};

Evaluation evaluate(const BeamState& s, const ChannelRealization& ch,
                    const EffectiveChannels& eff, const SystemParams& p,
                    const FpWeights& w) {
  Evaluation e;
  e.sinrs = compute_sinrs(s, ch, eff, p);
  e.value = weighted_log_rate(e.sinrs, w);
  return e;
}

FpWeights weights_for(Strategy strategy, const SystemParams& p, const std::vector<int>& xi) {
  return strategy == Strategy::kBinary ? masked_weights(p, xi) : weights_from(p);
}

// One passive step for a single UE. Returns the candidate vector and its
// lifted objective value; `gamma` receives the relaxation's optimum.
CVec passive_step(const SchemeTraits& tr, const CMat& cost, const SystemParams& p,
                  const AoConfig& cfg, CounterRng& rng, double& gamma) {
  const Eigen::Index l = cost.rows() - 1;
  if (tr.antenna) {
    QuadraticForm qf;
    qf.mat = -cost.topLeftCorner(l, l);
    qf.vec = cost.topRightCorner(l, 1);
    qf.radius_sq = p.ue_tx_power_w;
    const CVec v = solve_ball_constrained(qf).point;
    gamma = lifted_value(cost, v);
    return v;
  }
  const SdpSolution sol = solve_sdp(cost, cfg.sdp);
  gamma = sol.value;
  CVec v = recover_rank_one(sol.v_hat, cost, rng, cfg.n_random).v;
  if (tr.levels > 0) v = quantize_phases(v, tr.levels);
  return v;
}

WtcResult run_impl(const ChannelRealization& ch, const SystemParams& p,
                   const AoConfig& cfg) {
  validate(cfg);
  const SchemeTraits tr = traits_of(cfg.scheme);
  const bool binary = cfg.strategy == Strategy::kBinary;
  const int K = p.n_ue;
  CounterRng rng = RngSpec{cfg.seed}.stream("randomization");

  BeamState state = initial_state(ch, p, cfg);
  const std::vector<CVec> v_fixed = state.v;
  std::vector<int> xi(K, 1);
  std::vector<double> gamma(K, 0.0);
  std::vector<double> trace;
  bool converged = false;
  double f_prev = 0.0;

  for (int m = 1; m <= cfg.max_iters; ++m) {
    const FpWeights w = weights_for(cfg.strategy, p, xi);
    EffectiveChannels eff = channels_for(tr, ch, state.x);
    const Evaluation before = evaluate(state, ch, eff, p, w);
    const AuxState aux = update_aux(surrogate_terms(state, ch, eff, p), before.sinrs, w);

    BeamState cand = state;
    if (tr.free_beams) {
      cand.x = update_x(aux, cand, ch, w, p);
      eff = channels_for(tr, ch, cand.x);
    }

    std::vector<int> xi_new = xi;
    std::vector<double> gamma_new = gamma;
    if (!tr.free_v && binary) {
      // Fixed reflections still decide the schedule: each UE is scored by the
      // surrogate gain of its fixed vector.
      const SdpObjective obj = assemble_sdp(aux, cand, eff, w);
      std::vector<double> g(K);
      for (int k = 0; k < K; ++k) g[k] = lifted_value(obj.cost[k], v_fixed[k]);
      xi_new = select_ues(g).xi;
      gamma_new = g;
      for (int k = 0; k < K; ++k) {
        cand.v[k] = xi_new[k] ? v_fixed[k] : CVec::Zero(v_fixed[k].size());
      }
    }
    if (tr.free_v) {
      const SdpObjective obj = assemble_sdp(aux, cand, eff, w);
      std::vector<CVec> v_new(K);
      std::vector<double> g(K);
      for (int k = 0; k < K; ++k) {
        v_new[k] = passive_step(tr, obj.cost[k], p, cfg, rng, g[k]);
      }
      if (binary) {
        const Schedule sched = select_ues(g);
        xi_new = sched.xi;
        gamma_new = g;
      }
      const bool same_schedule = xi_new == xi;
      for (int k = 0; k < K; ++k) {
        if (binary && !xi_new[k]) {
          cand.v[k].setZero();
          continue;
        }
        // The lifted values are the v-dependent surrogate terms, UE by UE.
        if (cfg.keep_best && same_schedule &&
            lifted_value(obj.cost[k], v_new[k]) < lifted_value(obj.cost[k], cand.v[k])) {
          continue;
        }
        cand.v[k] = v_new[k];
      }
    }

    if (tr.free_beams) cand.w = update_w(aux, cand, ch, eff, w, p);

    const FpWeights w_new = weights_for(cfg.strategy, p, xi_new);
    double f = evaluate(cand, ch, eff, p, w_new).value;
    const bool rollback_allowed = !(binary && m == 1);
    if (cfg.keep_best && rollback_allowed && m > 1 && f < f_prev) {
      f = f_prev;  // reject the whole sweep
    } else {
      state = std::move(cand);
      xi = std::move(xi_new);
      gamma = std::move(gamma_new);
    }
    trace.push_back(f);

    if (m >= 2) {
      const double rel = f == 0.0 ? (f - f_prev == 0.0 ? 0.0 : 1.0)
                                  : (f - f_prev) / std::abs(f);
      if (rel < cfg.epsilon) {
        converged = true;
        f_prev = f;
        break;
      }
    }
    f_prev = f;
  }

  WtcResult r;
  r.scheme = std::string(to_string(cfg.scheme));
  r.strategy = cfg.strategy;
  r.seed = cfg.seed;
  r.n_elements = p.n_elements;
  r.tx_power_dbw = watts_to_dbw(p.tx_power_w);
  r.n_tx = p.n_tx;
  r.n_ue = K;
  r.iteration_trace = std::move(trace);
  r.converged = converged;

  const EffectiveChannels eff = channels_for(tr, ch, state.x);
  r.rates = compute_rates(state, ch, eff, p);
  double s_c = p.weight_radar * r.rates.rate_radar;
  std::vector<double> s_loc(K);
  for (int k = 0; k < K; ++k) {
    const int off = binary ? xi[k] : 1;
    s_c += p.weight_ue[k] * off * r.rates.rate_ue[k];
    s_loc[k] = p.weight_ue[k] * (binary ? 1 - xi[k] : 1) * r.rates.rate_local[k];
  }
  r.sum_rate_weighted = s_c;
  r.time_alloc = allocate_time(s_c, s_loc, p);
  r.wtc = wtc(cfg.strategy, r.time_alloc, xi, r.rates, p);
  if (binary) r.schedule = Schedule{xi, gamma};
  r.beams = std::move(state);
  return r;
}

}  // namespace

void validate(const AoConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon", "must be positive");
  if (cfg.max_iters < 1) throw ConfigError("max_iters", "must be at least 1");
  if (cfg.n_random < 0) throw ConfigError("randomizations", "must be nonnegative");
}

BeamState mrt_beams(const ChannelRealization& ch, const SystemParams& p) {
  BeamState s;
  const Eigen::Index nr = ch.lambda_radar.rows();
  s.w = CVec::Constant(nr, cd(1.0 / static_cast<double>(nr)));
  const CVec dir = (s.w.adjoint() * ch.lambda_radar).adjoint();
  const double nrm = dir.norm();
  if (nrm == 0.0) throw SolverError("mrt_beams: radar channel is zero");
  s.x = std::sqrt(p.tx_power_w) * dir / nrm;
  return s;
}

BeamState initial_state(const ChannelRealization& ch, const SystemParams& p,
                        const AoConfig& cfg) {
  const SchemeTraits tr = traits_of(cfg.scheme);
  const int K = p.n_ue;
  BeamState s;
  if (tr.free_beams) {
    const CVec& at = ch.a_tx.entries;
    const CVec& ar = ch.a_radar.entries;
    s.x = std::sqrt(p.tx_power_w) * at.conjugate() / at.norm();
    s.w = ar / ar.norm();
  } else {
    s = mrt_beams(ch, p);
  }

  CounterRng init = RngSpec{cfg.seed}.stream("init");
  s.v.resize(K);
  if (tr.antenna) {
    const double mag = std::sqrt(p.ue_tx_power_w / p.n_ue_antennas);
    for (int k = 0; k < K; ++k) {
      s.v[k].resize(p.n_ue_antennas);
      for (int a = 0; a < p.n_ue_antennas; ++a) {
        s.v[k](a) = std::polar(mag, 2.0 * std::numbers::pi * init.uniform());
      }
    }
  } else if (!tr.free_v) {
    const double mag = std::sqrt(p.ue_tx_power_w / p.n_elements);
    const EffectiveChannels eff = effective_channels(ch, s.x);
    for (int k = 0; k < K; ++k) s.v[k] = matched_phases(eff.t_info[k], mag);
  } else {
    for (int k = 0; k < K; ++k) {
      s.v[k].resize(p.n_elements);
      for (int l = 0; l < p.n_elements; ++l) {
        s.v[k](l) = std::polar(1.0, 2.0 * std::numbers::pi * init.uniform());
      }
      if (tr.levels > 0) s.v[k] = quantize_phases(s.v[k], tr.levels);
    }
  }
  return s;
}

WtcResult run_scheme(const ChannelRealization& ch, const SystemParams& p,
                     const AoConfig& cfg) {
  return run_impl(ch, p, cfg);
}

WtcResult run_partial(const ChannelRealization& ch, const SystemParams& p, AoConfig cfg) {
  cfg.strategy = Strategy::kPartial;
  return run_impl(ch, p, cfg);
}

WtcResult run_binary(const ChannelRealization& ch, const SystemParams& p, AoConfig cfg) {
  cfg.strategy = Strategy::kBinary;
  return run_impl(ch, p, cfg);
}

WtcResult run_benchmark(Scheme scheme, const ChannelRealization& ch,
                        const SystemParams& p, AoConfig cfg) {
  cfg.scheme = scheme;
  return run_impl(ch, p, cfg);
}

}  // namespace iscc
