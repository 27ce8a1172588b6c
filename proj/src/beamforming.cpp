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

#include "iscc/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace iscc {

namespace {

constexpr int kMaxBisection = 200;
constexpr double kBisectionRelTol = 1e-12;
constexpr double kSingularRel = 1e-12;

}  // namespace

double quadratic_objective(const QuadraticForm& qf, const CVec& u) {
  return u.dot(qf.mat * u).real() - 2.0 * u.dot(qf.vec).real();
}

BallSolution solve_ball_constrained(const QuadraticForm& qf) {
  const Eigen::Index n = qf.vec.size();
  BallSolution sol;
  if (qf.vec.squaredNorm() == 0.0) {
    sol.point = CVec::Zero(n);
    return sol;
  }

  const Eigen::SelfAdjointEigenSolver<CMat> es(qf.mat);
  if (es.info() != Eigen::Success) {
    throw SolverError("solve_ball_constrained: eigendecomposition failed");
  }
  const Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0);
  const CVec c = es.eigenvectors().adjoint() * qf.vec;
  const Eigen::VectorXd c2 = c.cwiseAbs2();
  const double d_max = d.maxCoeff();
  const double r2 = qf.radius_sq;

  const auto norm_sq = [&](double lambda) {
    double g = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double denom = d(i) + lambda;
      if (denom <= 0.0) {
        if (c2(i) > 0.0) return std::numeric_limits<double>::infinity();
        continue;
      }
      g += c2(i) / (denom * denom);
    }
    return g;
  };
  const auto point_at = [&](double lambda) {
    CVec scaled(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double denom = d(i) + lambda;
      scaled(i) = denom > 0.0 ? c(i) / denom : cd(0.0);
    }
    return CVec(es.eigenvectors() * scaled);
  };

  if (d_max > 0.0) {
    double ridge = 0.0;
    if (d.minCoeff() <= kSingularRel * d_max) {
      ridge = kSingularRel * d.sum() / static_cast<double>(n);
    }
    if (norm_sq(ridge) <= r2) {
      sol.point = point_at(ridge);
      sol.multiplier = 0.0;
      return sol;
    }
  }

  double lo = 0.0;
  double hi = std::sqrt(qf.vec.squaredNorm() / r2) + d_max;
  while (norm_sq(hi) > r2) hi *= 2.0;
  double lambda = hi;
  for (int it = 0; it < kMaxBisection; ++it) {
    sol.iterations = it + 1;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = norm_sq(mid);
    if (std::abs(g - r2) <= kBisectionRelTol * r2) {
      lambda = mid;
      break;
    }
    if (g > r2) {
      lo = mid;
    } else {
      hi = mid;
    }
    lambda = hi;
  }
  sol.multiplier = lambda;
  sol.point = point_at(lambda);
  const double nrm2 = sol.point.squaredNorm();
  if (nrm2 > r2) sol.point *= std::sqrt(r2 / nrm2);
  return sol;
}

QuadraticForm assemble_x_form(const AuxState& aux, const BeamState& state,
                              const ChannelRealization& ch, const FpWeights& weights,
                              const SystemParams& p) {
  const Eigen::Index nt = state.x.size();
  const std::size_t K = state.v.size();
  const cd eta = ch.target_coeff;
  const cd beta_r_conj = std::conj(aux.beta_radar);

  // Each row r contributes r^H r to Y.
  std::vector<Eigen::RowVectorXcd> rows;
  QuadraticForm qf;
  qf.vec = CVec::Zero(nt);
  qf.radius_sq = p.tx_power_w;

  const Eigen::RowVectorXcd echo_row =
      beta_r_conj * eta * (state.w.adjoint() * ch.lambda_radar);
  rows.push_back(echo_row);
  qf.vec += std::sqrt(weights.radar * (1.0 + aux.alpha_radar)) * echo_row.adjoint();

  std::vector<CMat> cascade_info(K);
  for (std::size_t j = 0; j < K; ++j) {
    const CMat cascade_radar =
        ch.f_irs_radar[j] * state.v[j].asDiagonal() * ch.h_bs_irs[j];
    cascade_info[j] = ch.f_irs_info[j] * state.v[j].asDiagonal() * ch.h_bs_irs[j];
    rows.push_back(beta_r_conj * (state.w.adjoint() * cascade_radar));
  }
  for (std::size_t k = 0; k < K; ++k) {
    const CVec& beta = aux.beta_ue[k];
    rows.push_back(eta * (beta.adjoint() * ch.lambda_info));
    for (std::size_t j = 0; j < K; ++j) {
      rows.push_back(beta.adjoint() * cascade_info[j]);
    }
    const double c = std::sqrt(weights.ue[k] * (1.0 + aux.alpha_ue[k]));
    qf.vec += c * (beta.adjoint() * cascade_info[k]).adjoint();
  }

  CMat stacked(static_cast<Eigen::Index>(rows.size()), nt);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    stacked.row(static_cast<Eigen::Index>(i)) = rows[i];
  }
  qf.mat = stacked.adjoint() * stacked;
  return qf;
}

QuadraticForm assemble_w_form(const AuxState& aux, const BeamState& state,
                              const ChannelRealization& ch,
                              const EffectiveChannels& eff, const FpWeights& weights,
                              const SystemParams& p) {
  const Eigen::Index nr = ch.lambda_radar.rows();
  const std::size_t K = state.v.size();
  const cd beta_r = aux.beta_radar;
  const CVec echo = ch.target_coeff * (ch.lambda_radar * state.x);

  // Columns s contribute s s^H to Q.
  CMat cols(nr, static_cast<Eigen::Index>(K) + 1);
  cols.col(0) = beta_r * echo;
  for (std::size_t k = 0; k < K; ++k) {
    cols.col(static_cast<Eigen::Index>(k) + 1) = beta_r * (eff.t_radar[k] * state.v[k]);
  }

  QuadraticForm qf;
  qf.mat = cols * cols.adjoint();
  qf.mat.diagonal().array() += std::norm(beta_r) * p.noise_var_w;
  qf.vec = std::sqrt(weights.radar * (1.0 + aux.alpha_radar)) * std::conj(beta_r) * echo;
  qf.radius_sq = 1.0;
  return qf;
}

CVec update_x(const AuxState& aux, const BeamState& state,
              const ChannelRealization& ch, const FpWeights& weights,
              const SystemParams& p) {
  const QuadraticForm qf = assemble_x_form(aux, state, ch, weights, p);
  if (qf.vec.squaredNorm() == 0.0) return state.x;
  return solve_ball_constrained(qf).point;
}

CVec update_w(const AuxState& aux, const BeamState& state,
              const ChannelRealization& ch, const EffectiveChannels& eff,
              const FpWeights& weights, const SystemParams& p) {
  const QuadraticForm qf = assemble_w_form(aux, state, ch, eff, weights, p);
  if (qf.vec.squaredNorm() == 0.0) return state.w;
  return solve_ball_constrained(qf).point;
}

}  // namespace iscc
