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


#include "iscc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>

#include "iscc/channel.hpp"
#include "iscc/complexity.hpp"
#include "iscc/result_io.hpp"

namespace iscc {

namespace {

std::string fmt_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string series_stem(const SweepSpec& spec, std::size_t scheme_index, Strategy s) {
  return spec.schemes[scheme_index].name + "_" + std::string(to_string(s)) + "_" +
         std::string(to_string(spec.variable));
}

int as_count(SweepVar var, double value) {
  const double r = std::round(value);
  if (r != value || r < 1.0) {
    throw ConfigError("sweep", std::string(to_string(var)) + " needs positive integers");
  }
  return static_cast<int>(r);
}

}  // namespace

SweepVar parse_sweep_var(std::string_view name) {
  if (name == "L") return SweepVar::kElements;
  if (name == "P_dBW" || name == "P") return SweepVar::kPowerDbw;
  if (name == "N_t") return SweepVar::kTxAntennas;
  if (name == "K") return SweepVar::kUes;
  throw ConfigError("sweep", "unknown sweep variable '" + std::string(name) +
                                 "' (expected L, P_dBW, N_t or K)");
}

std::string_view to_string(SweepVar var) {
  switch (var) {
    case SweepVar::kElements: return "L";
    case SweepVar::kPowerDbw: return "P_dBW";
    case SweepVar::kTxAntennas: return "N_t";
    case SweepVar::kUes: return "K";
  }
  return "?";
}

SchemeChoice parse_scheme_choice(std::string_view name) {
  SchemeChoice c;
  c.name = std::string(name);
  if (name == "antenna4" || name == "antenna8") {
    c.scheme = Scheme::kAntenna;
    c.ue_antennas = name == "antenna4" ? 4 : 8;
    return c;
  }
  c.scheme = parse_scheme(name);
  return c;
}

void validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw ConfigError("sweep", "no values");
  if (!std::is_sorted(spec.values.begin(), spec.values.end())) {
    throw ConfigError("sweep", "values must be sorted");
  }
  if (spec.trials < 1) throw ConfigError("trials", "must be >= 1");
  if (spec.schemes.empty()) throw ConfigError("scheme", "no schemes selected");
  if (spec.strategies.empty()) throw ConfigError("strategy", "no strategies selected");
  if (spec.jobs < 1) throw ConfigError("jobs", "must be >= 1");
}

void parse_sweep_arg(std::string_view arg, SweepSpec& spec) {
  const auto eq = arg.find('=');
  if (eq == std::string_view::npos) throw ConfigError("sweep", "expected VAR=v1,v2,...");
  spec.variable = parse_sweep_var(arg.substr(0, eq));
  spec.values.clear();
  std::string_view rest = arg.substr(eq + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string token(rest.substr(0, comma));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
      throw ConfigError("sweep", "cannot parse value '" + token + "'");
    }
    spec.values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.values.empty()) throw ConfigError("sweep", "no values");
  std::sort(spec.values.begin(), spec.values.end());
  spec.values.erase(std::unique(spec.values.begin(), spec.values.end()), spec.values.end());
}

SystemParams params_at(const SystemParams& base, SweepVar var, double value) {
  SystemParams p = base;
  switch (var) {
    case SweepVar::kElements:
      p.n_elements = as_count(var, value);
      break;
    case SweepVar::kPowerDbw:
      p.tx_power_w = dbw_to_watts(value);
      p.ue_tx_power_w = dbm_to_watts(value - 9.0);
      break;
    case SweepVar::kTxAntennas:
      p.n_tx = as_count(var, value);
      break;
    case SweepVar::kUes:
      set_ue_count(p, as_count(var, value));
      p.n_rx_info = std::max(2 * p.n_ue, base.n_rx_info);
      break;
  }
  refresh_derived(p);
  validate(p);
  return p;
}

std::uint64_t trial_seed(const SweepSpec& spec, int trial) {
  return spec.base_seed + static_cast<std::uint64_t>(trial);
}

SweepTable plan_sweep(const SweepSpec& spec, const SystemParams& base) {
  validate(spec);
  SweepTable table;
  for (std::size_t s = 0; s < spec.schemes.size(); ++s) {
    for (Strategy st : spec.strategies) {
      for (double value : spec.values) {
        for (int t = 0; t < spec.trials; ++t) {
          SweepRow row;
          row.scheme_index = s;
          row.strategy = st;
          row.value = value;
          row.trial = t;
          row.seed = trial_seed(spec, t);
          row.params = params_at(base, spec.variable, value);
          if (spec.schemes[s].ue_antennas > 0) {
            row.params.n_ue_antennas = spec.schemes[s].ue_antennas;
          }
          table.rows.push_back(std::move(row));
        }
      }
    }
  }

  return table;
}

void execute_sweep(SweepTable& table, const SweepSpec& spec, const AoConfig& cfg,
                   const std::function<void(const SweepRow&)>& on_done) {
  validate(cfg);
  std::atomic<std::size_t> next{0};
  std::mutex callback_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < table.rows.size(); i = next++) {
      SweepRow& row = table.rows[i];
      try {
        const ChannelRealization ch = draw_channels(row.params, RngSpec{row.seed});
        AoConfig c = cfg;
        c.scheme = spec.schemes[row.scheme_index].scheme;
        c.strategy = row.strategy;
        c.seed = row.seed;
        WtcResult r = run_scheme(ch, row.params, c);
        r.scheme = spec.schemes[row.scheme_index].name;
        row.result = std::move(r);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      if (on_done) {
        const std::lock_guard<std::mutex> lock(callback_mutex);
        on_done(row);
      }
    }
  };
  const int n_workers =
      std::max(1, std::min<int>(spec.jobs, static_cast<int>(table.rows.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < n_workers; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
}

SweepTable run_sweep(const SweepSpec& spec, const SystemParams& base, const AoConfig& cfg,
                     const std::function<void(const SweepRow&)>& on_done) {
  validate(cfg);
  SweepTable table = plan_sweep(spec, base);
  execute_sweep(table, spec, cfg, on_done);
  return table;
}

std::string record_json(const SweepRow& row, const SweepSpec& spec, const AoConfig& cfg) {
  nlohmann::json j;
  j["sweep"] = {{"variable", std::string(to_string(spec.variable))},
                {"value", row.value},
                {"trial", row.trial},
                {"seed", row.seed}};
  j["config"] = {{"epsilon", cfg.epsilon},
                 {"max_iters", cfg.max_iters},
                 {"randomizations", cfg.n_random},
                 {"sdp_backend", std::string(to_string(cfg.sdp.backend))}};
  j["params"] = params_to_json(row.params);
  if (row.result) {
    j["result"] = result_to_json(*row.result);
    const int iters = std::max<int>(1, static_cast<int>(row.result->iteration_trace.size()));
    j["complexity"] = to_json(estimate(row.params, cfg.epsilon, iters));
  } else {
    j["error"] = row.error;
  }
  return j.dump(2) + "\n";
}

std::filesystem::path record_path(const std::filesystem::path& out_dir, const SweepRow& row,
                                  const SweepSpec& spec) {
  return out_dir / "records" /
         (series_stem(spec, row.scheme_index, row.strategy) + "_" + fmt_value(row.value) +
          "_s" + std::to_string(row.seed) + ".json");
}

void write_sweep(const SweepTable& table, const SweepSpec& spec,
                 const std::filesystem::path& out_dir) {
  std::map<std::pair<std::size_t, int>, std::vector<const SweepRow*>> series;
  for (const SweepRow& row : table.rows) {
    series[{row.scheme_index, static_cast<int>(row.strategy)}].push_back(&row);
  }

  std::string failures = "scheme,strategy,value,seed,error\n";
  for (const auto& [key, rows] : series) {
    const Strategy st = static_cast<Strategy>(key.second);
    const std::string stem = series_stem(spec, key.first, st);
    const std::filesystem::path base = out_dir / "results" / stem;

    std::string csv = csv_header();
    std::vector<PlotPoint> points;
    std::string trace = "# " + stem + " per-iteration weighted log-rate\n# value seed f1 f2 ...\n";
    for (const SweepRow* row : rows) {
      if (!row->result) {
        std::string err = row->error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        failures += spec.schemes[row->scheme_index].name + "," + std::string(to_string(st)) +
                    "," + fmt_value(row->value) + "," + std::to_string(row->seed) + "," + err +
                    "\n";
        continue;
      }
      csv += csv_row(*row->result);
      if (points.empty() || points.back().x != row->value) points.push_back({row->value, {}});
      points.back().y.push_back(row->result->wtc);
      if (spec.trace) {
        trace += fmt_value(row->value) + " " + std::to_string(row->seed);
        char buf[32];
        for (double f : row->result->iteration_trace) {
          std::snprintf(buf, sizeof buf, " %.12e", f);
          trace += buf;
        }
        trace += "\n";
      }
    }
    write_file_atomic(base.string() + ".csv", csv);
    write_file_atomic(base.string() + ".dat",
                      plot_data({stem + ": WTC [bits] versus " +
                                 std::string(to_string(spec.variable))},
                                points));
    if (spec.trace) write_file_atomic(base.string() + "_trace.dat", trace);
  }
  write_file_atomic(out_dir / "failures.csv", failures);
}

}  // namespace iscc
