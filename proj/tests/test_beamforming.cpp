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


#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "iscc/beamforming.hpp"
#include "test_support.hpp"

using namespace iscc;
using namespace iscc::testing;

namespace {

QuadraticForm random_form(CounterRng& rng) {
  const int n = uniform_int(rng, 1, 6);
  const int rank = uniform_int(rng, 0, n);
  QuadraticForm qf;
  qf.mat = rank == 0 ? CMat::Zero(n, n) : random_psd(rng, n, rank);
  qf.vec = random_cvec(rng, n, std::pow(10.0, rng.uniform(-2.0, 2.0)));
  qf.radius_sq = std::pow(10.0, rng.uniform(-1.0, 1.0));
  return qf;
}

struct Instance {
  SystemParams p;
  ChannelRealization ch;
  BeamState s;
  FpWeights wt;
  AuxState aux;
};

Instance make_instance(std::uint64_t seed) {
  CounterRng rng(seed);
  Instance in;
  in.p = desk_params(rng);
  in.ch = draw_channels(in.p, RngSpec{seed});
  in.s = random_state(rng, in.p);
  in.wt = weights_from(in.p);
  const EffectiveChannels eff = effective_channels(in.ch, in.s.x);
  in.aux = update_aux(surrogate_terms(in.s, in.ch, eff, in.p),
                      compute_sinrs(in.s, in.ch, eff, in.p), in.wt);
  return in;
}

double surrogate_at(const Instance& in, const BeamState& s) {
  const EffectiveChannels eff = effective_channels(in.ch, s.x);
  return surrogate_value(in.aux, surrogate_terms(s, in.ch, eff, in.p), in.wt);
}

double stationarity(const QuadraticForm& qf, const BallSolution& sol) {
  const CVec r = qf.mat * sol.point + sol.multiplier * sol.point - qf.vec;
  return r.norm() / std::max(1.0, qf.vec.norm());
}

}  // namespace

TEST_CASE("ball solver examples") {
  QuadraticForm qf;
  qf.mat = CMat::Identity(2, 2);
  qf.vec = CVec::Zero(2);
  qf.vec(0) = 1.0;
  qf.radius_sq = 2.0;
  BallSolution sol = solve_ball_constrained(qf);
  CHECK((sol.point - qf.vec).norm() < 1e-9);
  CHECK(sol.multiplier == 0.0);

  qf.vec(0) = 3.0;
  qf.radius_sq = 1.0;
  sol = solve_ball_constrained(qf);
  CHECK(std::abs(sol.point(0) - 1.0) < 1e-9);
  CHECK(std::abs(sol.point(1)) < 1e-12);
  CHECK(sol.multiplier == doctest::Approx(2.0).epsilon(1e-9));

  qf.vec.setZero();
  sol = solve_ball_constrained(qf);
  CHECK(sol.point.norm() == 0.0);

  // Zero matrix: the optimum is the boundary point along vec.
  qf.mat.setZero();
  qf.vec << cd(0.0, 2.0), 0.0;
  qf.radius_sq = 4.0;
  sol = solve_ball_constrained(qf);
  CHECK(std::abs(sol.point(0) - cd(0.0, 2.0)) < 1e-9);
}

TEST_CASE("ball solver beats random feasible probes") {
  CounterRng rng(17);
  for (int inst = 0; inst < 50; ++inst) {
    const QuadraticForm qf = random_form(rng);
    const BallSolution sol = solve_ball_constrained(qf);
    REQUIRE(sol.point.squaredNorm() <= qf.radius_sq * (1.0 + 1e-12));
    const double best = quadratic_objective(qf, sol.point);
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    for (int k = 0; k < 1000; ++k) {
      const CVec u = random_in_ball(rng, qf.vec.size(), qf.radius_sq);
      CHECK(quadratic_objective(qf, u) >= best - tol);
    }
  }
}

TEST_CASE("ball solver satisfies the optimality conditions") {
  CounterRng rng(23);
  for (int inst = 0; inst < 200; ++inst) {
    const QuadraticForm qf = random_form(rng);
    const BallSolution sol = solve_ball_constrained(qf);
    CHECK(sol.multiplier >= 0.0);
    CHECK(stationarity(qf, sol) < 1e-8);
    const double slack = qf.radius_sq - sol.point.squaredNorm();
    CHECK(sol.multiplier * slack <= 1e-8 * std::max(1.0, sol.multiplier * qf.radius_sq));
  }
}

TEST_CASE("constrained norm decreases in the multiplier") {
  CounterRng rng(31);
  for (int inst = 0; inst < 20; ++inst) {
    QuadraticForm qf = random_form(rng);
    double prev = std::numeric_limits<double>::infinity();
    for (double lambda = 1e-3; lambda < 1e3; lambda *= 3.0) {
      CMat m = qf.mat;
      m.diagonal().array() += lambda;
      const double g = m.llt().solve(qf.vec).squaredNorm();
      CHECK(g < prev);
      prev = g;
    }
  }
}

TEST_CASE("form assembly structure") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance in = make_instance(900 + seed);
    const EffectiveChannels eff = effective_channels(in.ch, in.s.x);
    const QuadraticForm xf = assemble_x_form(in.aux, in.s, in.ch, in.wt, in.p);
    const QuadraticForm wf = assemble_w_form(in.aux, in.s, in.ch, eff, in.wt, in.p);
    for (const QuadraticForm* qf : {&xf, &wf}) {
      CHECK((qf->mat - qf->mat.adjoint()).norm() <= 1e-12 * std::max(1.0, qf->mat.norm()));
      const Eigen::SelfAdjointEigenSolver<CMat> es(qf->mat);
      CHECK(es.eigenvalues().minCoeff() >= -1e-10 * std::max(1.0, qf->mat.norm()));
    }
    CHECK(xf.radius_sq == in.p.tx_power_w);
    CHECK(wf.radius_sq == 1.0);

    AuxState zero = in.aux;
    zero.beta_radar = 0.0;
    for (CVec& b : zero.beta_ue) b.setZero();
    const QuadraticForm x0 = assemble_x_form(zero, in.s, in.ch, in.wt, in.p);
    CHECK(x0.mat.norm() == 0.0);
    CHECK(x0.vec.norm() == 0.0);
    const QuadraticForm w0 = assemble_w_form(zero, in.s, in.ch, eff, in.wt, in.p);
    CHECK(w0.mat.norm() == 0.0);
    CHECK(w0.vec.norm() == 0.0);
  }
}

TEST_CASE("x form reproduces surrogate differences") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance in = make_instance(1000 + seed);
    const QuadraticForm qf = assemble_x_form(in.aux, in.s, in.ch, in.wt, in.p);
    CounterRng rng(seed);
    BeamState a = in.s, b = in.s;
    a.x = random_in_ball(rng, in.p.n_tx, in.p.tx_power_w);
    b.x = random_in_ball(rng, in.p.n_tx, in.p.tx_power_w);
    const double fa = surrogate_at(in, a), fb = surrogate_at(in, b);
    const double dq = quadratic_objective(qf, a.x) - quadratic_objective(qf, b.x);
    // Differences cancel, so the tolerance follows the surrogate's magnitude.
    CHECK(std::abs((fa - fb) + dq) <= 1e-10 * std::max({1.0, std::abs(fa), std::abs(fb)}));
  }
}

TEST_CASE("w form reproduces surrogate differences") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance in = make_instance(1100 + seed);
    const EffectiveChannels eff = effective_channels(in.ch, in.s.x);
    const QuadraticForm qf = assemble_w_form(in.aux, in.s, in.ch, eff, in.wt, in.p);
    CounterRng rng(seed);
    BeamState a = in.s, b = in.s;
    a.w = random_in_ball(rng, in.p.n_rx_radar, 1.0);
    b.w = random_in_ball(rng, in.p.n_rx_radar, 1.0);
    const double fa = surrogate_at(in, a), fb = surrogate_at(in, b);
    const double dq = quadratic_objective(qf, a.w) - quadratic_objective(qf, b.w);
    CHECK(std::abs((fa - fb) + dq) <= 1e-10 * std::max({1.0, std::abs(fa), std::abs(fb)}));
  }
}

TEST_CASE("block updates never decrease the surrogate") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance in = make_instance(1200 + seed);
    const double f0 = surrogate_at(in, in.s);
    BeamState s = in.s;
    s.x = update_x(in.aux, in.s, in.ch, in.wt, in.p);
    CHECK(s.x.squaredNorm() <= in.p.tx_power_w * (1.0 + 1e-12));
    const double f1 = surrogate_at(in, s);
    CHECK(f1 >= f0 - 1e-10 * std::max(1.0, std::abs(f0)));
    const EffectiveChannels eff = effective_channels(in.ch, s.x);
    s.w = update_w(in.aux, s, in.ch, eff, in.wt, in.p);
    CHECK(s.w.squaredNorm() <= 1.0 + 1e-12);
    CHECK(surrogate_at(in, s) >= f1 - 1e-10 * std::max(1.0, std::abs(f1)));
  }
}

TEST_CASE("combiner without reflection interference is matched") {
  Instance in = make_instance(77);
  for (CVec& v : in.s.v) v.setZero();
  const EffectiveChannels eff = effective_channels(in.ch, in.s.x);
  const CVec w = update_w(in.aux, in.s, in.ch, eff, in.wt, in.p);
  const CVec echo = in.ch.lambda_radar * in.s.x;
  // Collinear with the echo: |<w, e>| = ||w|| ||e||.
  CHECK(std::abs(w.dot(echo)) == doctest::Approx(w.norm() * echo.norm()).epsilon(1e-9));

  Instance blind = make_instance(78);
  blind.ch.target_coeff = 0.0;
  const EffectiveChannels eff2 = effective_channels(blind.ch, blind.s.x);
  CHECK(update_w(blind.aux, blind.s, blind.ch, eff2, blind.wt, blind.p) == blind.s.w);
}
