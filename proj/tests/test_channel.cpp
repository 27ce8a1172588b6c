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
#include <complex>

#include "iscc/channel.hpp"
#include "test_support.hpp"

using namespace iscc;

namespace {

SystemParams small_params() {
  SystemParams p = default_params();
  p.n_tx = 3;
  p.n_rx_radar = 2;
  p.n_rx_info = 4;
  p.n_elements = 5;
  set_ue_count(p, 2);
  return p;
}

}  // namespace

TEST_CASE("steering vectors") {
  SystemParams p = default_params();
  p.n_tx = 4;
  const SteeringVector a = steering(ArrayKind::kTx, 0.0, p);
  for (int n = 0; n < 4; ++n) CHECK(std::abs(a.entries(n) - cd(0.25)) < 1e-15);

  p.n_tx = 2;
  p.antenna_spacing_wl = 0.5;
  const SteeringVector b = steering(ArrayKind::kTx, M_PI / 6, p);
  CHECK(std::abs(b.entries(0) - cd(0.5)) < 1e-15);
  CHECK(std::abs(b.entries(1) - cd(0.0, 0.5)) < 1e-15);

  p.n_rx_radar = 4;
  const SteeringVector c = steering(ArrayKind::kRadarRx, M_PI / 6, p);
  REQUIRE(c.entries.size() == 4);
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(c.entries(n) - 0.25 * std::polar(1.0, M_PI * n / 2)) < 1e-14);
  }
  CHECK(c.entries.squaredNorm() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(c.kind == ArrayKind::kRadarRx);
}

TEST_CASE("path loss") {
  const SystemParams p = default_params();
  CHECK(path_loss_linear(1.0, p) == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(path_loss_linear(10.0, p) == doctest::Approx(std::pow(10.0, -5.5)).epsilon(1e-14));
  CHECK(path_loss_linear(50.0, p) ==
        doctest::Approx(std::pow(10.0, -3.0 - 2.5 * std::log10(50.0))).epsilon(1e-14));
  CHECK(path_loss_linear(50.0, p) == doctest::Approx(std::pow(10.0, -7.2474)).epsilon(1e-4));
  CHECK_THROWS_AS(path_loss_linear(0.0, p), std::invalid_argument);
  CHECK_THROWS_AS(path_loss_linear(-3.0, p), std::invalid_argument);
}

TEST_CASE("Rician limit of a huge K factor is deterministic in magnitude") {
  CounterRng rng(5);
  const double gain = 1e-4;
  const CMat h = draw_rician(16, 16, gain, 1e12, 0.5, rng);
  // LOS entries are unit modulus, so |h|^2 / gain only sees the NLOS part.
  double mean = 0.0, sq = 0.0;
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    const double r = std::norm(h(i)) / gain;
    mean += r;
    sq += r * r;
  }
  mean /= h.size();
  const double var = sq / h.size() - mean * mean;
  CHECK(std::abs(mean - 1.0) < 1e-5);
  CHECK(var < 1e-10);
}

TEST_CASE("Rayleigh entries have the path-loss power") {
  CounterRng rng(9);
  const double gain = 2.5;
  const int draws = 10000;
  double p_sum = 0.0, p_sq = 0.0, re_sum = 0.0, re2 = 0.0, re4 = 0.0;
  for (int i = 0; i < draws; ++i) {
    const cd h = draw_rician(1, 1, gain, 0.0, 0.5, rng)(0, 0);
    const double pw = std::norm(h);
    p_sum += pw;
    p_sq += pw * pw;
    const double re = h.real() / std::sqrt(gain / 2.0);
    re_sum += re;
    re2 += re * re;
    re4 += re * re * re * re;
  }
  const double mean = p_sum / draws;
  const double sd = std::sqrt(p_sq / draws - mean * mean);
  CHECK(std::abs(mean - gain) < 3.0 * sd / std::sqrt(draws));
  CHECK(std::abs(re_sum / draws) < 0.05);
  CHECK(re2 / draws == doctest::Approx(1.0).epsilon(0.05));
  CHECK(re4 / draws == doctest::Approx(3.0).epsilon(0.1));  // Gaussian kurtosis
}

TEST_CASE("channel realizations") {
  const SystemParams p = small_params();
  const ChannelRealization a = draw_channels(p, RngSpec{77});
  const ChannelRealization b = draw_channels(p, RngSpec{77});
  const ChannelRealization c = draw_channels(p, RngSpec{78});

  REQUIRE(a.h_bs_irs.size() == 2);
  CHECK(a.h_bs_irs[0].rows() == 5);
  CHECK(a.h_bs_irs[0].cols() == 3);
  CHECK(a.f_irs_info[1].rows() == 4);
  CHECK(a.f_irs_radar[1].rows() == 2);
  CHECK(a.g_ue_direct[0].cols() == p.n_ue_antennas);

  for (int k = 0; k < 2; ++k) {
    CHECK(a.h_bs_irs[k] == b.h_bs_irs[k]);
    CHECK(a.f_irs_info[k] == b.f_irs_info[k]);
    CHECK(a.f_irs_radar[k] == b.f_irs_radar[k]);
    CHECK(a.g_ue_direct[k] == b.g_ue_direct[k]);
    CHECK(a.ue_distances_m[k] >= p.ue_avg_dist_m - 10.0);
    CHECK(a.ue_distances_m[k] <= p.ue_avg_dist_m + 10.0);
    CHECK(a.h_bs_irs[k].allFinite());
  }
  CHECK(a.target_coeff == b.target_coeff);
  CHECK(a.h_bs_irs[0] != c.h_bs_irs[0]);
  CHECK(std::abs(a.target_coeff) ==
        doctest::Approx(path_loss_linear(p.radar_dist_m, p)).epsilon(1e-12));

  // Lambda matrices are exact outer products, hence rank one.
  CHECK((a.lambda_radar - a.a_radar.entries * a.a_tx.entries.transpose()).norm() == 0.0);
  CHECK((a.lambda_info - a.a_info.entries * a.a_tx.entries.transpose()).norm() == 0.0);
  const Eigen::JacobiSVD<CMat> svd(a.lambda_info);
  CHECK(svd.singularValues()(1) < 1e-15 * svd.singularValues()(0));
}

TEST_CASE("mean Frobenius power of the BS-IRS channel") {
  SystemParams p = small_params();
  p.n_elements = 4;
  p.n_tx = 2;
  set_ue_count(p, 1);
  double ratio = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const ChannelRealization ch = draw_channels(p, RngSpec{static_cast<std::uint64_t>(i)});
    const double expect = p.n_elements * p.n_tx * path_loss_linear(ch.ue_distances_m[0], p);
    ratio += ch.h_bs_irs[0].squaredNorm() / expect;
  }
  CHECK(std::abs(ratio / draws - 1.0) < 0.02);
}

TEST_CASE("effective channels") {
  const SystemParams p = small_params();
  const ChannelRealization ch = draw_channels(p, RngSpec{3});
  CounterRng rng(4);
  const CVec x = testing::random_cvec(rng, p.n_tx);
  const EffectiveChannels eff = effective_channels(ch, x);
  for (int k = 0; k < p.n_ue; ++k) {
    const CVec inc = ch.h_bs_irs[k] * x;
    for (int l = 0; l < p.n_elements; ++l) {
      CHECK((eff.t_info[k].col(l) - ch.f_irs_info[k].col(l) * inc(l)).norm() < 1e-14);
      CHECK((eff.t_radar[k].col(l) - ch.f_irs_radar[k].col(l) * inc(l)).norm() < 1e-14);
    }
  }
  const EffectiveChannels zero = effective_channels(ch, CVec::Zero(p.n_tx));
  CHECK(zero.t_info[0].norm() == 0.0);
  CHECK(zero.t_radar[1].norm() == 0.0);
  CHECK_THROWS_AS(effective_channels(ch, CVec::Zero(p.n_tx + 1)), std::invalid_argument);

  SystemParams one = p;
  one.n_elements = 1;
  const ChannelRealization c1 = draw_channels(one, RngSpec{3});
  const EffectiveChannels e1 = effective_channels(c1, x);
  const cd scalar = (c1.h_bs_irs[0] * x)(0);
  CHECK((e1.t_info[0] - c1.f_irs_info[0] * scalar).norm() < 1e-14);

  const EffectiveChannels direct = direct_channels(ch);
  CHECK(direct.t_info[0] == ch.g_ue_direct[0]);
  CHECK(direct.t_radar[1] == ch.g_ue_radar[1]);
}

TEST_CASE("channel dump") {
  const SystemParams p = small_params();
  const ChannelRealization ch = draw_channels(p, RngSpec{3});
  const nlohmann::json j = channels_to_json(ch);
  CHECK(j["h_bs_irs"].size() == 2);
  CHECK(j["h_bs_irs"][0].size() == 5);     // rows
  CHECK(j["h_bs_irs"][0][0].size() == 3);  // cols
  CHECK(j["h_bs_irs"][0][0][0].size() == 2);
  CHECK(j["h_bs_irs"][0][1][2][0].get<double>() == ch.h_bs_irs[0](1, 2).real());
  CHECK(j["target_coeff"][1].get<double>() == ch.target_coeff.imag());
}
