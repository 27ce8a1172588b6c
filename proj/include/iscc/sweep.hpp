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


#ifndef ISCC_SWEEP_HPP_
#define ISCC_SWEEP_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iscc/ao.hpp"
#include "iscc/params.hpp"
#include "iscc/types.hpp"

namespace iscc {

enum class SweepVar { kElements, kPowerDbw, kTxAntennas, kUes };

SweepVar parse_sweep_var(std::string_view name);
std::string_view to_string(SweepVar var);

// Scheme as named on the command line; antenna4 / antenna8 also fix N_a.
struct SchemeChoice {
  std::string name;
  Scheme scheme = Scheme::kJoint;
  int ue_antennas = 0;  // 0 keeps the configured value
};

SchemeChoice parse_scheme_choice(std::string_view name);

struct SweepSpec {
  SweepVar variable = SweepVar::kElements;
  std::vector<double> values;
  int trials = 20;
  std::vector<SchemeChoice> schemes;
  std::vector<Strategy> strategies;
  std::uint64_t base_seed = 1;
  bool trace = false;
  int jobs = 1;
};

void validate(const SweepSpec& spec);

// Parses "VAR=v1,v2,..." into the variable and its sorted values.
void parse_sweep_arg(std::string_view arg, SweepSpec& spec);

// Parameters at one sweep point. Sweeping K raises N_c to at least 2K;
// sweeping P moves the UE power with it, P_a[dBm] = P[dBW] - 9.
SystemParams params_at(const SystemParams& base, SweepVar var, double value);

std::uint64_t trial_seed(const SweepSpec& spec, int trial);

struct SweepRow {
  std::size_t scheme_index = 0;
  Strategy strategy = Strategy::kPartial;
  double value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<WtcResult> result;
  std::string error;  // set when the run failed
  SystemParams params;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // sorted by scheme, strategy, value, seed
};

// Runs every (scheme, strategy, value, trial) combination. The same channel
// draw is shared by all schemes at a given (value, trial). `on_done` is
// called once per finished row, possibly from worker threads.
SweepTable run_sweep(const SweepSpec& spec, const SystemParams& base, const AoConfig& cfg,
                     const std::function<void(const SweepRow&)>& on_done = {});

// The two halves of run_sweep. Planning builds and validates every row's
// parameters, so a bad sweep point is a ConfigError before anything runs;
// execution records a failing run in its row and carries on.
SweepTable plan_sweep(const SweepSpec& spec, const SystemParams& base);
void execute_sweep(SweepTable& table, const SweepSpec& spec, const AoConfig& cfg,
                   const std::function<void(const SweepRow&)>& on_done = {});

// Per-run JSON record (params, result, complexity estimate).
std::string record_json(const SweepRow& row, const SweepSpec& spec, const AoConfig& cfg);
std::filesystem::path record_path(const std::filesystem::path& out_dir, const SweepRow& row,
                                  const SweepSpec& spec);

// results/<scheme>_<strategy>_<var>.{csv,dat}[, _trace.dat] and
// failures.csv under out_dir.
void write_sweep(const SweepTable& table, const SweepSpec& spec,
                 const std::filesystem::path& out_dir);

}  // namespace iscc

#endif  // ISCC_SWEEP_HPP_
