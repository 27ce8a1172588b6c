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

#include <cmath>

#include "iscc/surrogate.hpp"
#include "test_support.hpp"

using namespace iscc;
using namespace iscc::testing;

namespace {

struct Instance {
  SystemParams p;
  ChannelRealization ch;
  BeamState s;
  EffectiveChannels eff;
  FpWeights wt;
  SurrogateTerms terms;
  Sinrs sinrs;
};

Instance make_instance(std::uint64_t seed) {
  CounterRng rng(seed);
  Instance in;
  in.p = desk_params(rng);
  in.ch = draw_channels(in.p, RngSpec{seed});
  in.s = random_state(rng, in.p);
  in.eff = effective_channels(in.ch, in.s.x);
  in.wt = weights_from(in.p);
  in.terms = surrogate_terms(in.s, in.ch, in.eff, in.p);
  in.sinrs = compute_sinrs(in.s, in.ch, in.eff, in.p);
  return in;
}

// One radar ratio with SINR 3 and a zero-weight UE.
SurrogateTerms scalar_terms(cd a_radar, double b_radar) {
  SurrogateTerms t;
  t.a_radar = a_radar;
  t.b_radar = b_radar;
  t.a_ue = {CVec::Ones(1)};
  t.b_info = 2.0 * CMat::Identity(1, 1);
  return t;
}

}  // namespace

TEST_CASE("auxiliary update on scalar ratios") {
  const SurrogateTerms t = scalar_terms(std::sqrt(3.0), 4.0);
  const Sinrs g{3.0, {1.0}};
  const FpWeights wt{1.0, {0.0}};
  const AuxState aux = update_aux(t, g, wt);
  CHECK(aux.alpha_radar == 3.0);
  CHECK(std::abs(aux.beta_radar - cd(std::sqrt(3.0) / 2.0)) < 1e-15);
  CHECK(aux.beta_ue[0].norm() == 0.0);
  CHECK(surrogate_value(aux, t, wt) == doctest::Approx(std::log(4.0)).epsilon(1e-14));

  const AuxState half = update_aux(scalar_terms(0.5, 1.0), Sinrs{0.0, {0.0}}, wt);
  CHECK(half.alpha_radar == 0.0);
  CHECK(std::abs(half.beta_radar - 0.5) < 1e-15);
}

TEST_CASE("terms reproduce the SINRs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance in = make_instance(400 + seed);
    const double ar2 = std::norm(in.terms.a_radar);
    CHECK(ar2 / (in.terms.b_radar - ar2) ==
          doctest::Approx(in.sinrs.radar).epsilon(1e-9));
    for (std::size_t k = 0; k < in.terms.a_ue.size(); ++k) {
      const CVec& a = in.terms.a_ue[k];
      const double ratio = a.dot(in.terms.b_info.llt().solve(a)).real();
      // a^H B^{-1} a = g / (1 + g) when B includes the desired signal.
      CHECK(ratio == doctest::Approx(in.sinrs.ue[k] / (1.0 + in.sinrs.ue[k])).epsilon(1e-9));
    }
  }
}

TEST_CASE("surrogate is tight at the optimal auxiliaries") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance in = make_instance(500 + seed);
    const AuxState aux = update_aux(in.terms, in.sinrs, in.wt);
    const double f = weighted_log_rate(in.sinrs, in.wt);
    const double s = surrogate_value(aux, in.terms, in.wt);
    CHECK(std::abs(s - f) <= 1e-9 * std::max(1.0, std::abs(f)));
  }
}

TEST_CASE("optimal auxiliaries maximize the surrogate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance in = make_instance(600 + seed);
    const AuxState best = update_aux(in.terms, in.sinrs, in.wt);
    const double top = surrogate_value(best, in.terms, in.wt);
    CounterRng rng(seed);
    for (int trial = 0; trial < 64; ++trial) {
      AuxState aux = best;
      const double scale = std::pow(10.0, rng.uniform(-4.0, 0.0));
      aux.alpha_radar = std::max(0.0, aux.alpha_radar + scale * rng.normal());
      aux.beta_radar += scale * rng.complex_normal();
      for (std::size_t k = 0; k < aux.alpha_ue.size(); ++k) {
        aux.alpha_ue[k] = std::max(0.0, aux.alpha_ue[k] + scale * rng.normal());
        aux.beta_ue[k] += random_cvec(rng, aux.beta_ue[k].size(), scale);
      }
      CHECK(surrogate_value(aux, in.terms, in.wt) <= top + 1e-12 * std::max(1.0, top));
    }
  }
}

TEST_CASE("surrogate is concave in the quadratic-transform variables") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance in = make_instance(700 + seed);
    const AuxState base = update_aux(in.terms, in.sinrs, in.wt);
    CounterRng rng(seed + 1000);
    AuxState a = base, b = base, mid = base;
    a.beta_radar += rng.complex_normal();
    b.beta_radar += rng.complex_normal();
    mid.beta_radar = 0.5 * (a.beta_radar + b.beta_radar);
    for (std::size_t k = 0; k < base.beta_ue.size(); ++k) {
      a.beta_ue[k] += random_cvec(rng, base.beta_ue[k].size());
      b.beta_ue[k] += random_cvec(rng, base.beta_ue[k].size());
      mid.beta_ue[k] = 0.5 * (a.beta_ue[k] + b.beta_ue[k]);
    }
    const double fa = surrogate_value(a, in.terms, in.wt);
    const double fb = surrogate_value(b, in.terms, in.wt);
    const double fm = surrogate_value(mid, in.terms, in.wt);
    CHECK(fm >= 0.5 * (fa + fb) - 1e-12 * std::max(1.0, std::abs(fm)));
  }
}

TEST_CASE("auxiliary update is a fixed point") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance in = make_instance(800 + seed);
    const AuxState a1 = update_aux(in.terms, in.sinrs, in.wt);
    const AuxState a2 = update_aux(in.terms, in.sinrs, in.wt);
    CHECK(a1.alpha_radar == a2.alpha_radar);
    CHECK(a1.beta_radar == a2.beta_radar);
    for (std::size_t k = 0; k < a1.beta_ue.size(); ++k) {
      CHECK(a1.beta_ue[k] == a2.beta_ue[k]);
    }
  }
}

TEST_CASE("masked weights remove unscheduled UEs") {
  SystemParams p = default_params();
  set_ue_count(p, 3);
  p.weight_ue = {0.2, 0.3, 0.5};
  const FpWeights w = masked_weights(p, {1, 0, 1});
  CHECK(w.ue == std::vector<double>{0.2, 0.0, 0.5});
  CHECK(w.radar == p.weight_radar);
  CHECK(weighted_log_rate(Sinrs{0.0, {1.0, 5.0, 0.0}}, w) ==
        doctest::Approx(0.2 * std::log(2.0)));
}
