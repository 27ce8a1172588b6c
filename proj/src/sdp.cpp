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

#include "iscc/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace iscc {

namespace {

using Eigen::Index;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

CMat hermitian_part(const CMat& m) { return 0.5 * (m + m.adjoint()); }

// Scales rows/columns so that the diagonal satisfies the box constraints and
// the homogenizing entry is exactly one. Congruence keeps the matrix PSD.
CMat repair_feasibility(CMat x) {
  const Index n = x.rows();
  x = hermitian_part(x);
  RVec d = RVec::Ones(n);
  for (Index i = 0; i + 1 < n; ++i) {
    const double xii = x(i, i).real();
    if (xii > 1.0) d(i) = 1.0 / std::sqrt(xii);
  }
  const double xnn = x(n - 1, n - 1).real();
  if (xnn > 0.0) d(n - 1) = 1.0 / std::sqrt(xnn);
  x = d.asDiagonal() * x * d.asDiagonal();
  for (Index i = 0; i < n; ++i) x(i, i) = cd(i + 1 < n ? std::min(x(i, i).real(), 1.0) : 1.0);
  if (xnn <= 0.0) x(n - 1, n - 1) = 1.0;
  return x;
}

double trace_value(const CMat& cost, const CMat& x) {
  return (cost.cwiseProduct(x.conjugate())).sum().real();
}

SdpSolution trivial_solution(Index n) {
  SdpSolution sol;
  sol.v_hat = CMat::Zero(n, n);
  sol.v_hat(n - 1, n - 1) = 1.0;
  sol.converged = true;
  return sol;
}

struct BarrierPoint {
  Eigen::LLT<CMat> llt;
  bool ok = false;
  double phi = 0.0;
};

bool barrier_eval(const CMat& cost, const RVec& y, double t, BarrierPoint& bp) {
  const Index n = y.size();
  for (Index i = 0; i + 1 < n; ++i) {
    if (!(y(i) > 0.0)) return false;
  }
  CMat s = -cost;
  s.diagonal() += y.cast<cd>();
  bp.llt.compute(s);
  if (bp.llt.info() != Eigen::Success) return false;
  const auto& l = bp.llt.matrixLLT();
  double logdet = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double lii = l(i, i).real();
    if (!(lii > 0.0) || !std::isfinite(lii)) return false;
    logdet += 2.0 * std::log(lii);
  }
  double phi = t * y.sum() - logdet;
  for (Index i = 0; i + 1 < n; ++i) phi -= std::log(y(i));
  bp.phi = phi;
  bp.ok = true;
  return true;
}

// Dual barrier: min t sum(y) - log det(Diag(y) - C) - sum_{i<n} log y_i.
// At the central point, X = (Diag(y) - C)^{-1} / t is primal feasible with
// duality gap (2n - 1) / t.
SdpSolution solve_barrier(const CMat& c, const SdpOptions& opt) {
  const Index n = c.rows();
  RVec y = RVec::Constant(n, 2.0);  // ||C||_F = 1, so Diag(y) - C > 0
  double t = 1.0;
  SdpSolution sol;
  CMat s_inv;
  int newton_steps = 0;
  bool done = false;
  BarrierPoint cur;
  if (!barrier_eval(c, y, t, cur)) throw SolverError("solve_sdp: infeasible start");

  while (!done) {
    for (int inner = 0; inner < 50 && newton_steps < opt.max_iters; ++inner) {
      ++newton_steps;
      s_inv = cur.llt.solve(CMat::Identity(n, n));
      RVec g(n);
      RMat h(n, n);
      for (Index i = 0; i < n; ++i) {
        g(i) = t - s_inv(i, i).real();
        for (Index j = 0; j < n; ++j) h(i, j) = std::norm(s_inv(i, j));
        if (i + 1 < n) {
          g(i) -= 1.0 / y(i);
          h(i, i) += 1.0 / (y(i) * y(i));
        }
      }
      const Eigen::LDLT<RMat> ldlt(h);
      const RVec dy = -ldlt.solve(g);
      const double decrement = -g.dot(dy);
      if (!std::isfinite(decrement)) break;
      if (decrement < 1e-14) break;

      // Damped Newton step; self-concordance keeps it inside the domain and
      // avoids comparing barrier values that are dominated by t * sum(y).
      const double lambda = std::sqrt(decrement);
      double step = lambda < 0.25 ? 1.0 : 1.0 / (1.0 + lambda);
      BarrierPoint next;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        const RVec trial = y + step * dy;
        if (barrier_eval(c, trial, t, next)) {
          y = trial;
          cur = std::move(next);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
      if (decrement < 1e-12) break;
    }
    s_inv = cur.llt.solve(CMat::Identity(n, n));
    const double gap = static_cast<double>(2 * n - 1) / t;
    if (gap <= opt.gap_tol) {
      sol.converged = true;
      done = true;
    } else if (newton_steps >= opt.max_iters) {
      done = true;
    } else {
      t *= 20.0;
      if (!barrier_eval(c, y, t, cur)) throw SolverError("solve_sdp: lost interior");
    }
  }

  // Primal point from one more Newton system: its diagonal satisfies the
  // constraints to the accuracy of the linear solve rather than that of the
  // centering, and it is PSD whenever the Newton decrement is below one.
  CMat x = s_inv / t;
  {
    RVec g(n);
    RMat h(n, n);
    for (Index i = 0; i < n; ++i) {
      g(i) = t - s_inv(i, i).real();
      for (Index j = 0; j < n; ++j) h(i, j) = std::norm(s_inv(i, j));
      if (i + 1 < n) {
        g(i) -= 1.0 / y(i);
        h(i, i) += 1.0 / (y(i) * y(i));
      }
    }
    const RVec dy = -Eigen::LDLT<RMat>(h).solve(g);
    if (std::isfinite(dy.sum()) && -g.dot(dy) < 1.0) {
      const CMat corrected =
          (s_inv - s_inv * dy.cast<cd>().asDiagonal() * s_inv) / t;
      const Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(corrected),
                                                   Eigen::EigenvaluesOnly);
      if (es.eigenvalues()(0) >= 0.0) x = corrected;
    }
  }
  // Residual of the diagonal constraints before repair.
  double viol = std::abs(x(n - 1, n - 1).real() - 1.0);
  for (Index i = 0; i + 1 < n; ++i) viol = std::max(viol, x(i, i).real() - 1.0);
  sol.v_hat = repair_feasibility(x);
  sol.value = trace_value(c, sol.v_hat);
  sol.upper_bound = y.sum();
  sol.iterations = newton_steps;
  sol.primal_residual = std::max(viol, 0.0);
  sol.dual_residual = 0.0;  // iterates stay strictly dual feasible
  return sol;
}

CMat project_psd(const CMat& m, Eigen::SelfAdjointEigenSolver<CMat>& es) {
  es.compute(hermitian_part(m));
  const RVec d = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * d.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

// Diagonal box: Re X_ii <= 1 for i < n, X_nn = 1; off-diagonals free.
CMat project_box(CMat m) {
  const Index n = m.rows();
  for (Index i = 0; i < n; ++i) {
    m(i, i) = cd(i + 1 < n ? std::min(m(i, i).real(), 1.0) : 1.0);
  }
  return m;
}

// Splitting scheme on min -Tr(CX) over box(X) with X = Z, Z PSD.
SdpSolution solve_splitting(const CMat& c, const SdpOptions& opt) {
  const Index n = c.rows();
  constexpr double kRelax = 1.6;
  double rho = 1.0;
  CMat z = CMat::Identity(n, n);
  CMat u = CMat::Zero(n, n);
  CMat x = z;
  Eigen::SelfAdjointEigenSolver<CMat> es(n);
  SdpSolution sol;
  const double scale = std::sqrt(static_cast<double>(n));
  double r_norm = 0.0;
  double s_norm = 0.0;
  int it = 0;
  for (; it < opt.max_iters; ++it) {
    x = project_box(z - u + c / rho);
    const CMat x_hat = kRelax * x + (1.0 - kRelax) * z;
    const CMat z_old = z;
    z = project_psd(x_hat + u, es);
    u += x_hat - z;
    r_norm = (x - z).norm();
    s_norm = rho * (z - z_old).norm();
    const double eps_pri = opt.residual_tol * std::max(scale, std::max(x.norm(), z.norm()));
    const double eps_dual = opt.residual_tol * std::max(scale, rho * u.norm());
    if (r_norm <= eps_pri && s_norm <= eps_dual) {
      sol.converged = true;
      ++it;
      break;
    }
    if (it % 10 == 9) {
      if (r_norm > 10.0 * s_norm) {
        rho *= 2.0;
        u /= 2.0;
      } else if (s_norm > 10.0 * r_norm) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
  }
  sol.v_hat = repair_feasibility(z);
  sol.value = trace_value(c, sol.v_hat);
  sol.iterations = it;
  sol.primal_residual = r_norm;
  sol.dual_residual = s_norm;

  // Dual certificate from the box multipliers, shifted onto the cone.
  const CMat lam = c - rho * u;
  RVec y(n);
  for (Index i = 0; i < n; ++i) {
    y(i) = lam(i, i).real();
    if (i + 1 < n) y(i) = std::max(y(i), 0.0);
  }
  CMat s = -c;
  s.diagonal() += y.cast<cd>();
  es.compute(hermitian_part(s), Eigen::EigenvaluesOnly);
  const double shift = std::max(0.0, -es.eigenvalues()(0));
  sol.upper_bound = y.sum() + static_cast<double>(n) * shift;
  return sol;
}

CVec clip_unit(CVec v) {
  for (Index l = 0; l < v.size(); ++l) {
    const double mag = std::abs(v(l));
    if (mag > 1.0) v(l) /= mag;
  }
  return v;
}

}  // namespace

SdpObjective assemble_sdp(const AuxState& aux, const BeamState& state,
                          const EffectiveChannels& eff, const FpWeights& weights) {
  const std::size_t K = state.v.size();
  const Index nc = eff.t_info.empty() ? 0 : eff.t_info[0].rows();
  CMat beta_gram = CMat::Zero(nc, nc);
  for (const CVec& b : aux.beta_ue) beta_gram.noalias() += b * b.adjoint();

  SdpObjective obj;
  obj.cost.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    const Index l = eff.t_info[k].cols();
    const Eigen::RowVectorXcd wr = state.w.adjoint() * eff.t_radar[k];
    CMat g = std::norm(aux.beta_radar) * (wr.adjoint() * wr);
    g.noalias() += eff.t_info[k].adjoint() * beta_gram * eff.t_info[k];
    const double ck = std::sqrt(weights.ue[k] * (1.0 + aux.alpha_ue[k]));
    const CVec b = ck * (eff.t_info[k].adjoint() * aux.beta_ue[k]);

    CMat cost = CMat::Zero(l + 1, l + 1);
    cost.topLeftCorner(l, l) = -hermitian_part(g);
    cost.topRightCorner(l, 1) = b;
    cost.bottomLeftCorner(1, l) = b.adjoint();
    obj.cost.push_back(std::move(cost));
  }
  return obj;
}

double lifted_value(const CMat& cost, const CVec& v) {
  const Index l = v.size();
  const cd cross = v.dot(cost.topRightCorner(l, 1).col(0));
  return (v.dot(cost.topLeftCorner(l, l) * v)).real() + 2.0 * cross.real() +
         cost(l, l).real();
}

double step3_value(const SdpObjective& obj, const std::vector<CVec>& v) {
  double total = 0.0;
  for (std::size_t k = 0; k < obj.cost.size(); ++k) total += lifted_value(obj.cost[k], v[k]);
  return total;
}

SdpBackend parse_sdp_backend(std::string_view name) {
  if (name == "barrier" || name == "ipm") return SdpBackend::kBarrier;
  if (name == "splitting" || name == "admm") return SdpBackend::kSplitting;
  throw ConfigError("sdp_backend", "unknown SDP backend '" + std::string(name) + "'");
}

std::string_view to_string(SdpBackend backend) {
  return backend == SdpBackend::kBarrier ? "barrier" : "splitting";
}

SdpSolution solve_sdp(const CMat& cost, const SdpOptions& options) {
  const Index n = cost.rows();
  const double scale = cost.norm();
  if (scale == 0.0) return trivial_solution(n);
  const CMat c = hermitian_part(cost) / scale;
  SdpSolution sol = options.backend == SdpBackend::kBarrier ? solve_barrier(c, options)
                                                            : solve_splitting(c, options);
  sol.value *= scale;
  sol.upper_bound *= scale;
  return sol;
}

std::vector<SdpSolution> solve_sdp(const SdpObjective& obj, const SdpOptions& options) {
  std::vector<SdpSolution> out;
  out.reserve(obj.cost.size());
  for (const CMat& c : obj.cost) out.push_back(solve_sdp(c, options));
  return out;
}

Recovery recover_rank_one(const CMat& v_hat, const CMat& cost, CounterRng& rng,
                          int n_random) {
  const Index n = v_hat.rows();
  const Index l = n - 1;
  Recovery best;
  best.v = CVec::Zero(l);
  best.value = lifted_value(cost, best.v);

  const auto consider = [&](const CVec& lifted) {
    const cd last = lifted(l);
    if (std::abs(last) < 1e-12 * lifted.norm() || std::abs(last) == 0.0) return;
    const CVec v = clip_unit(lifted.head(l) / last);
    const double val = lifted_value(cost, v);
    if (val > best.value) {
      best.value = val;
      best.v = v;
    }
  };

  consider(v_hat.col(l));
  const Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(v_hat));
  const RVec lam = es.eigenvalues().cwiseMax(0.0);
  consider(std::sqrt(lam(l)) * es.eigenvectors().col(l));

  const CMat factor = es.eigenvectors() * lam.cwiseSqrt().cast<cd>().asDiagonal();
  CVec r(n);
  for (int g = 0; g < n_random; ++g) {
    for (Index i = 0; i < n; ++i) r(i) = rng.complex_normal();
    consider(factor * r);
  }
  return best;
}

CVec quantize_phases(const CVec& v, int levels) {
  const double step = 2.0 * std::numbers::pi / levels;
  CVec out(v.size());
  for (Index l = 0; l < v.size(); ++l) {
    const double mag = std::abs(v(l));
    if (mag == 0.0) {
      out(l) = 0.0;
      continue;
    }
    const double q = std::round(std::arg(v(l)) / step) * step;
    out(l) = std::polar(mag, q);
  }
  return out;
}

nlohmann::json sdp_to_json(const SdpObjective& obj,
                           const std::vector<SdpSolution>& solutions) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t k = 0; k < obj.cost.size(); ++k) {
    nlohmann::json e{{"ue", k}, {"cost", to_json(obj.cost[k])}};
    if (k < solutions.size()) {
      const SdpSolution& s = solutions[k];
      e["v_hat"] = to_json(s.v_hat);
      e["value"] = s.value;
      e["upper_bound"] = s.upper_bound;
      e["iterations"] = s.iterations;
      e["converged"] = s.converged;
    }
    j.push_back(std::move(e));
  }
  return j;
}

}  // namespace iscc
