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


#include "iscc/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "iscc/metrics.hpp"

namespace iscc {

namespace {

double comm_power(const SystemParams& p) { return p.n_elements * p.element_power_w; }

double local_power(int k, const SystemParams& p) {
  const double f = p.cpu_freq_hz[k];
  return p.energy_coeff[k] * f * f * f;
}

}  // namespace

double max_comm_time(const SystemParams& p) {
  double hi = p.block_time_s;
  const double pc = comm_power(p);
  if (pc > 0.0) {
    for (int k = 0; k < p.n_ue; ++k) {
      hi = std::min(hi, p.energy_budget_j[k] / pc);
      while (hi > 0.0 && hi * pc > p.energy_budget_j[k]) hi = std::nextafter(hi, 0.0);
    }
  }
  return std::max(hi, 0.0);
}

double local_time_for(int k, double t_comm, const SystemParams& p) {
  const double pl = local_power(k, p);
  const double spare = p.energy_budget_j[k] - t_comm * comm_power(p);
  if (pl <= 0.0) return spare >= 0.0 ? p.block_time_s : 0.0;
  double t = std::clamp(spare / pl, 0.0, p.block_time_s);
  // Guard against the sum rounding above the budget; the backoff grows
  // geometrically so this ends within a few dozen steps.
  for (double step = std::numeric_limits<double>::epsilon();
       t > 0.0 && energy_ue(k, t, t_comm, p) > p.energy_budget_j[k]; step *= 2.0) {
    t = std::max(0.0, t - t * step);
  }
  return t;
}

double time_objective(const TimeAlloc& alloc, double s_c, const std::vector<double>& s_loc) {
  double v = alloc.t_comm * s_c;
  for (std::size_t k = 0; k < s_loc.size(); ++k) v += alloc.t_local[k] * s_loc[k];
  return v;
}

TimeAlloc allocate_time(double s_c, const std::vector<double>& s_loc, const SystemParams& p) {
  if (s_c < 0.0 || std::any_of(s_loc.begin(), s_loc.end(), [](double s) { return s < 0.0; })) {
    throw std::invalid_argument("allocate_time: weighted rates must be nonnegative");
  }
  for (int k = 0; k < p.n_ue; ++k) {
    if (!(p.energy_budget_j[k] >= 0.0)) {
      throw std::invalid_argument("allocate_time: empty feasible set");
    }
  }
  const double hi = max_comm_time(p);
  const double pc = comm_power(p);

  std::vector<double> candidates{0.0, hi};
  if (pc > 0.0) {
    for (int k = 0; k < p.n_ue; ++k) {
      candidates.push_back((p.energy_budget_j[k] - p.block_time_s * local_power(k, p)) / pc);
      candidates.push_back(p.energy_budget_j[k] / pc);
    }
  }

  const auto build = [&](double t_c) {
    TimeAlloc a;
    a.t_comm = t_c;
    a.t_local.assign(p.n_ue, 0.0);
    for (int k = 0; k < p.n_ue; ++k) {
      if (s_loc[k] > 0.0) a.t_local[k] = local_time_for(k, t_c, p);
    }
    return a;
  };

  TimeAlloc best;
  double best_val = -1.0;
  for (double c : candidates) {
    const double t_c = std::clamp(c, 0.0, hi);
    TimeAlloc a = build(t_c);
    const double val = time_objective(a, s_c, s_loc);
    if (val > best_val) {
      best_val = val;
      best = std::move(a);
    }
  }
  return best;
}

Schedule select_ues(const std::vector<double>& gamma) {
  const std::size_t K = gamma.size();
  const std::size_t m = (K + 1) / 2;
  std::vector<std::size_t> order(K);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gamma[a] > gamma[b]; });
  Schedule s;
  s.gamma = gamma;
  s.xi.assign(K, 0);
  for (std::size_t i = 0; i < m; ++i) s.xi[order[i]] = 1;
  return s;
}

}  // namespace iscc
