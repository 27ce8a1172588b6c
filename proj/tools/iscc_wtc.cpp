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


// Command-line front end: runs parameter sweeps of the WTC maximization
// pipelines and writes CSV, plot-data and JSON records under --out.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iscc/ao.hpp"
#include "iscc/params.hpp"
#include "iscc/result_io.hpp"
#include "iscc/sweep.hpp"

extern char** environ;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ISCC_<KEY>=value (or ISAC_<KEY>) for any configuration key.
std::map<std::string, std::string> env_overrides() {
  std::map<std::string, std::string> kv;
  for (char** e = environ; e != nullptr && *e != nullptr; ++e) {
    const std::string entry(*e);
    for (const char* prefix : {"ISCC_", "ISAC_"}) {
      const std::string pre(prefix);
      if (entry.rfind(pre, 0) != 0) continue;
      const auto eq = entry.find('=');
      if (eq == std::string::npos || eq == pre.size()) continue;
      std::string key = entry.substr(pre.size(), eq - pre.size());
      std::transform(key.begin(), key.end(), key.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      kv[key] = entry.substr(eq + 1);
    }
  }
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweeps the WTC maximization of the IRS-backscatter ISCC system."};
  std::string config_path;
  std::string sweep_arg;
  std::string scheme_arg = "joint";
  std::string strategy_arg = "partial";
  std::uint64_t seed = 1;
  int trials = 20;
  bool trace = false;
  std::string out_dir = "out";
  double epsilon = 1e-3;
  int jobs = 1;
  bool paper_scale = false;
  int max_iters = 100;
  int randomizations = 50;
  std::string sdp_backend = "barrier";
  std::vector<std::string> sets;

  app.add_option("--config", config_path, "Parameter file (key = value [unit] lines)");
  app.add_option("--sweep", sweep_arg, "VAR=v1,v2,... with VAR in {L, P_dBW, N_t, K}");
  app.add_option("--scheme", scheme_arg,
                 "joint, mrt, antenna, antenna4, antenna8, reflective, discrete4, discrete8");
  app.add_option("--strategy", strategy_arg, "partial, binary or both");
  app.add_option("--seed", seed, "Seed of the first trial");
  app.add_option("--trials", trials, "Seeds per sweep point");
  app.add_flag("--trace", trace, "Write per-iteration objective traces");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--epsilon", epsilon, "Relative convergence threshold");
  app.add_option("--jobs", jobs, "Worker threads");
  app.add_flag("--paper-scale", paper_scale, "Full-size defaults (L = 64, K = 4)");
  app.add_option("--max-iters", max_iters, "Iteration cap of the alternating loop");
  app.add_option("--randomizations", randomizations, "Gaussian randomizations per recovery");
  app.add_option("--sdp-backend", sdp_backend, "barrier or splitting");
  app.add_option("--set", sets, "KEY=VALUE parameter override (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\nerror: " << e.what() << "\n";
    return kExitConfig;
  }

  iscc::SweepSpec spec;
  iscc::SystemParams params;
  iscc::AoConfig cfg;
  try {
    params = iscc::default_params();
    if (!paper_scale) {
      params.n_elements = 16;
      iscc::set_ue_count(params, 2);
    }
    if (!config_path.empty()) params = iscc::load_params_file(config_path, params);
    params = iscc::apply_overrides(env_overrides(), params);
    std::map<std::string, std::string> kv;
    for (const std::string& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw iscc::ConfigError("set", "expected KEY=VALUE");
      kv[s.substr(0, eq)] = s.substr(eq + 1);
    }
    params = iscc::apply_overrides(kv, params);
    iscc::refresh_derived(params);
    iscc::validate(params);

    if (sweep_arg.empty()) sweep_arg = "L=" + std::to_string(params.n_elements);
    iscc::parse_sweep_arg(sweep_arg, spec);
    for (const std::string& name : split(scheme_arg)) {
      spec.schemes.push_back(iscc::parse_scheme_choice(name));
    }
    if (strategy_arg == "both") {
      spec.strategies = {iscc::Strategy::kPartial, iscc::Strategy::kBinary};
    } else {
      spec.strategies = {iscc::parse_strategy(strategy_arg)};
    }
    spec.trials = trials;
    spec.base_seed = seed;
    spec.trace = trace;
    spec.jobs = jobs;
    iscc::validate(spec);

    cfg.epsilon = epsilon;
    cfg.max_iters = max_iters;
    cfg.n_random = randomizations;
    cfg.sdp.backend = iscc::parse_sdp_backend(sdp_backend);
    iscc::validate(cfg);
  } catch (const iscc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const std::filesystem::path out(out_dir);
    std::filesystem::create_directories(out / "results");
    std::filesystem::create_directories(out / "records");
    const auto start = std::chrono::steady_clock::now();
    std::size_t done = 0;
    const iscc::SweepTable table = iscc::run_sweep(
        spec, params, cfg, [&](const iscc::SweepRow& row) {
          iscc::write_file_atomic(iscc::record_path(out, row, spec),
                                  iscc::record_json(row, spec, cfg));
          ++done;
          if (!row.error.empty()) {
            std::fprintf(stderr, "run failed (%s, seed %llu): %s\n",
                         spec.schemes[row.scheme_index].name.c_str(),
                         static_cast<unsigned long long>(row.seed), row.error.c_str());
          }
        });
    iscc::write_sweep(table, spec, out);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t failed = 0;
    for (const auto& row : table.rows) failed += row.result ? 0 : 1;
    std::printf("%zu runs, %zu failed, %.2f s wall-clock; results in %s\n", done, failed, secs,
                out.string().c_str());
  } catch (const iscc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
