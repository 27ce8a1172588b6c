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


#include "iscc/result_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "iscc/channel.hpp"

namespace iscc {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

nlohmann::json params_to_json(const SystemParams& p) {
  return {{"n_tx", p.n_tx},
          {"n_rx_radar", p.n_rx_radar},
          {"n_rx_info", p.n_rx_info},
          {"n_ue", p.n_ue},
          {"n_elements", p.n_elements},
          {"n_ue_antennas", p.n_ue_antennas},
          {"tx_power_w", p.tx_power_w},
          {"noise_var_w", p.noise_var_w},
          {"bandwidth_hz", p.bandwidth_hz},
          {"weight_radar", p.weight_radar},
          {"weight_ue", p.weight_ue},
          {"rician_k", p.rician_k},
          {"pl0_db", p.pl0_db},
          {"ref_dist_m", p.ref_dist_m},
          {"radar_dist_m", p.radar_dist_m},
          {"ue_avg_dist_m", p.ue_avg_dist_m},
          {"cpu_freq_hz", p.cpu_freq_hz},
          {"cycles_per_bit", p.cycles_per_bit},
          {"energy_coeff", p.energy_coeff},
          {"energy_budget_j", p.energy_budget_j},
          {"block_time_s", p.block_time_s},
          {"element_power_w", p.element_power_w},
          {"antenna_spacing_wl", p.antenna_spacing_wl},
          {"target_angle_rad", p.target_angle_rad},
          {"ue_tx_power_w", p.ue_tx_power_w}};
}

nlohmann::json result_to_json(const WtcResult& r) {
  nlohmann::json j{{"scheme", r.scheme},
                   {"strategy", std::string(to_string(r.strategy))},
                   {"seed", r.seed},
                   {"n_elements", r.n_elements},
                   {"tx_power_dbw", r.tx_power_dbw},
                   {"n_tx", r.n_tx},
                   {"n_ue", r.n_ue},
                   {"wtc", r.wtc},
                   {"sum_rate_weighted", r.sum_rate_weighted},
                   {"t_comm", r.time_alloc.t_comm},
                   {"t_local", r.time_alloc.t_local},
                   {"iteration_trace", r.iteration_trace},
                   {"iterations", r.iteration_trace.size()},
                   {"converged", r.converged}};
  j["rates"] = {{"sinr_radar", r.rates.sinr_radar},
                {"sinr_ue", r.rates.sinr_ue},
                {"rate_radar", r.rates.rate_radar},
                {"rate_ue", r.rates.rate_ue},
                {"rate_local", r.rates.rate_local}};
  if (r.schedule) j["schedule"] = {{"xi", r.schedule->xi}, {"gamma", r.schedule->gamma}};
  nlohmann::json v = nlohmann::json::array();
  for (const CVec& vk : r.beams.v) v.push_back(to_json(vk));
  j["beams"] = {{"x", to_json(r.beams.x)}, {"w", to_json(r.beams.w)}, {"v", v}};
  return j;
}

std::string csv_header() {
  return "scheme,strategy,seed,L,P_dBW,N_t,K,wtc,sum_rate_weighted,t_c,iterations\n";
}

std::string csv_row(const WtcResult& r) {
  std::string s = r.scheme;
  s += ',';
  s += to_string(r.strategy);
  s += ',' + std::to_string(r.seed);
  s += ',' + std::to_string(r.n_elements);
  s += ',' + fmt("%.6g", r.tx_power_dbw);
  s += ',' + std::to_string(r.n_tx);
  s += ',' + std::to_string(r.n_ue);
  s += ',' + fmt("%.12e", r.wtc);
  s += ',' + fmt("%.12e", r.sum_rate_weighted);
  s += ',' + fmt("%.12e", r.time_alloc.t_comm);
  s += ',' + std::to_string(r.iteration_trace.size());
  s += '\n';
  return s;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

double quantile(std::vector<double> sample, double q) {
  if (sample.empty()) return std::nan("");
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sample.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sample[lo] + frac * (sample[hi] - sample[lo]);
}

std::string plot_data(const std::vector<std::string>& comments,
                      const std::vector<PlotPoint>& points) {
  std::string s;
  for (const std::string& c : comments) s += "# " + c + '\n';
  s += "# x median q25 q75\n";
  for (const PlotPoint& p : points) {
    s += fmt("%.6g", p.x) + ' ' + fmt("%.12e", quantile(p.y, 0.5)) + ' ' +
         fmt("%.12e", quantile(p.y, 0.25)) + ' ' + fmt("%.12e", quantile(p.y, 0.75)) + '\n';
  }
  return s;
}

}  // namespace iscc
