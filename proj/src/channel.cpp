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

#include "iscc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace iscc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfPi = 1.5707963267948966192313216916398;

int array_size(ArrayKind kind, const SystemParams& p) {
  switch (kind) {
    case ArrayKind::kTx:
      return p.n_tx;
    case ArrayKind::kRadarRx:
      return p.n_rx_radar;
    case ArrayKind::kInfoRx:
      return p.n_rx_info;
  }
  return 0;
}

}  // namespace

CVec ula_response(int n, double angle, double spacing_wl) {
  CVec a(n);
  const double phase_step = kTwoPi * spacing_wl * std::sin(angle);
  for (int i = 0; i < n; ++i) a(i) = std::polar(1.0, phase_step * i);
  return a;
}

SteeringVector steering(ArrayKind kind, double angle, const SystemParams& p) {
  const int n = array_size(kind, p);
  SteeringVector s;
  s.entries = ula_response(n, angle, p.antenna_spacing_wl) / static_cast<double>(n);
  s.angle = angle;
  s.kind = kind;
  return s;
}

double path_loss_linear(double dist_m, const SystemParams& p) {
  if (!(dist_m > 0.0)) {
    throw std::invalid_argument("path_loss_linear: distance must be positive");
  }
  const double pl_db = p.pl0_db - 25.0 * std::log10(dist_m / p.ref_dist_m);
  return std::pow(10.0, pl_db / 10.0);
}

CMat draw_rician(int rows, int cols, double gain, double rician_k,
                 double spacing_wl, CounterRng& rng) {
  const double rx_angle = rng.uniform(-kHalfPi, kHalfPi);
  const double tx_angle = rng.uniform(-kHalfPi, kHalfPi);
  const CMat los = ula_response(rows, rx_angle, spacing_wl) *
                   ula_response(cols, tx_angle, spacing_wl).transpose();
  CMat nlos(rows, cols);
  // Column-major fill keeps the draw order fixed by (rows, cols).
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) nlos(r, c) = rng.complex_normal();
  }
  const double los_w = std::sqrt(rician_k / (1.0 + rician_k));
  const double nlos_w = std::sqrt(1.0 / (1.0 + rician_k));
  return std::sqrt(gain) * (los_w * los + nlos_w * nlos);
}

ChannelRealization draw_channels(const SystemParams& p, const RngSpec& rng) {
  ChannelRealization ch;
  const int K = p.n_ue;
  const double d = p.antenna_spacing_wl;

  CounterRng placement = rng.stream("ue-placement");
  ch.ue_distances_m.resize(K);
  for (int k = 0; k < K; ++k) {
    ch.ue_distances_m[k] =
        placement.uniform(p.ue_avg_dist_m - 10.0, p.ue_avg_dist_m + 10.0);
  }

  CounterRng links = rng.stream("channels");
  for (int k = 0; k < K; ++k) {
    const double gain = path_loss_linear(ch.ue_distances_m[k], p);
    ch.h_bs_irs.push_back(
        draw_rician(p.n_elements, p.n_tx, gain, p.rician_k, d, links));
    ch.f_irs_info.push_back(
        draw_rician(p.n_rx_info, p.n_elements, gain, p.rician_k, d, links));
    ch.f_irs_radar.push_back(
        draw_rician(p.n_rx_radar, p.n_elements, gain, p.rician_k, d, links));
  }

  CounterRng target = rng.stream("target");
  const double round_trip = path_loss_linear(p.radar_dist_m, p);
  ch.target_coeff = std::polar(round_trip, kTwoPi * target.uniform());

  ch.a_tx = steering(ArrayKind::kTx, p.target_angle_rad, p);
  ch.a_radar = steering(ArrayKind::kRadarRx, p.target_angle_rad, p);
  ch.a_info = steering(ArrayKind::kInfoRx, p.target_angle_rad, p);
  ch.lambda_radar = ch.a_radar.entries * ch.a_tx.entries.transpose();
  ch.lambda_info = ch.a_info.entries * ch.a_tx.entries.transpose();

  CounterRng direct = rng.stream("antenna");
  for (int k = 0; k < K; ++k) {
    const double gain = path_loss_linear(ch.ue_distances_m[k], p);
    ch.g_ue_direct.push_back(
        draw_rician(p.n_rx_info, p.n_ue_antennas, gain, p.rician_k, d, direct));
    ch.g_ue_radar.push_back(
        draw_rician(p.n_rx_radar, p.n_ue_antennas, gain, p.rician_k, d, direct));
  }
  return ch;
}

EffectiveChannels effective_channels(const ChannelRealization& ch, const CVec& x) {
  EffectiveChannels eff;
  const std::size_t K = ch.h_bs_irs.size();
  eff.t_info.reserve(K);
  eff.t_radar.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    if (ch.h_bs_irs[k].cols() != x.size()) {
      throw std::invalid_argument("effective_channels: x has wrong length");
    }
    const CVec incident = ch.h_bs_irs[k] * x;
    eff.t_info.push_back(ch.f_irs_info[k] * incident.asDiagonal());
    eff.t_radar.push_back(ch.f_irs_radar[k] * incident.asDiagonal());
  }
  return eff;
}

EffectiveChannels direct_channels(const ChannelRealization& ch) {
  return {ch.g_ue_direct, ch.g_ue_radar};
}

nlohmann::json to_json(const CMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const CVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back({v(i).real(), v(i).imag()});
  }
  return out;
}

nlohmann::json channels_to_json(const ChannelRealization& ch) {
  nlohmann::json j;
  const auto list = [](const std::vector<CMat>& ms) {
    nlohmann::json a = nlohmann::json::array();
    for (const CMat& m : ms) a.push_back(to_json(m));
    return a;
  };
  j["h_bs_irs"] = list(ch.h_bs_irs);
  j["f_irs_info"] = list(ch.f_irs_info);
  j["f_irs_radar"] = list(ch.f_irs_radar);
  j["g_ue_direct"] = list(ch.g_ue_direct);
  j["g_ue_radar"] = list(ch.g_ue_radar);
  j["lambda_radar"] = to_json(ch.lambda_radar);
  j["lambda_info"] = to_json(ch.lambda_info);
  j["target_coeff"] = {ch.target_coeff.real(), ch.target_coeff.imag()};
  j["ue_distances_m"] = ch.ue_distances_m;
  return j;
}

}  // namespace iscc
