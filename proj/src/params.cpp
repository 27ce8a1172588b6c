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

#include "iscc/params.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <variant>

#include "iscc/types.hpp"

namespace iscc {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

constexpr double kDefaultCpuHz = 1e9;
constexpr double kDefaultCycles = 1e5;
constexpr double kDefaultEnergyCoeff = 1e-26;  // 10 W/GHz^3
constexpr double kBudgetFraction = 0.8;

enum class Quantity {
  kCount,
  kPower,
  kFrequency,
  kTime,
  kLength,
  kAngle,
  kDimensionless,
  kDecibel,
  kEnergyCoeff,
  kEnergy,
  kFlag,
};

using Target = std::variant<int*, double*, std::vector<double>*, bool*>;

struct Field {
  std::string key;
  std::vector<std::string> aliases;
  Quantity quantity;
  std::function<Target(SystemParams&)> target;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> kFields = {
      {"n_tx", {"N_t", "Nt"}, Quantity::kCount,
       [](SystemParams& p) -> Target { return &p.n_tx; }},
      {"n_rx_radar", {"N_r", "Nr"}, Quantity::kCount,
       [](SystemParams& p) -> Target { return &p.n_rx_radar; }},
      {"n_rx_info", {"N_c", "Nc"}, Quantity::kCount,
       [](SystemParams& p) -> Target { return &p.n_rx_info; }},
      {"n_ue", {"K"}, Quantity::kCount,
       [](SystemParams& p) -> Target { return &p.n_ue; }},
      {"n_elements", {"L"}, Quantity::kCount,
       [](SystemParams& p) -> Target { return &p.n_elements; }},
      {"n_ue_antennas", {"N_a", "Na"}, Quantity::kCount,
       [](SystemParams& p) -> Target { return &p.n_ue_antennas; }},
      {"tx_power_w", {"P"}, Quantity::kPower,
       [](SystemParams& p) -> Target { return &p.tx_power_w; }},
      {"noise_var_w", {"sigma2"}, Quantity::kPower,
       [](SystemParams& p) -> Target { return &p.noise_var_w; }},
      {"bandwidth_hz", {"B"}, Quantity::kFrequency,
       [](SystemParams& p) -> Target { return &p.bandwidth_hz; }},
      {"weight_radar", {"omega_r"}, Quantity::kDimensionless,
       [](SystemParams& p) -> Target { return &p.weight_radar; }},
      {"weight_ue", {"omega_k"}, Quantity::kDimensionless,
       [](SystemParams& p) -> Target { return &p.weight_ue; }},
      {"rician_k", {"kappa"}, Quantity::kDimensionless,
       [](SystemParams& p) -> Target { return &p.rician_k; }},
      {"pl0_db", {"PL0", "PL_0"}, Quantity::kDecibel,
       [](SystemParams& p) -> Target { return &p.pl0_db; }},
      {"ref_dist_m", {"d0", "d_0"}, Quantity::kLength,
       [](SystemParams& p) -> Target { return &p.ref_dist_m; }},
      {"radar_dist_m", {"d_r"}, Quantity::kLength,
       [](SystemParams& p) -> Target { return &p.radar_dist_m; }},
      {"ue_avg_dist_m", {"d_u"}, Quantity::kLength,
       [](SystemParams& p) -> Target { return &p.ue_avg_dist_m; }},
      {"cpu_freq_hz", {"f_k"}, Quantity::kFrequency,
       [](SystemParams& p) -> Target { return &p.cpu_freq_hz; }},
      {"cycles_per_bit", {"c_k"}, Quantity::kDimensionless,
       [](SystemParams& p) -> Target { return &p.cycles_per_bit; }},
      {"energy_coeff", {"eps_k", "epsilon_k"}, Quantity::kEnergyCoeff,
       [](SystemParams& p) -> Target { return &p.energy_coeff; }},
      {"energy_budget_j", {"E_th"}, Quantity::kEnergy,
       [](SystemParams& p) -> Target { return &p.energy_budget_j; }},
      {"energy_budget_auto", {}, Quantity::kFlag,
       [](SystemParams& p) -> Target { return &p.energy_budget_auto; }},
      {"block_time_s", {"T"}, Quantity::kTime,
       [](SystemParams& p) -> Target { return &p.block_time_s; }},
      {"element_power_w", {"mu"}, Quantity::kPower,
       [](SystemParams& p) -> Target { return &p.element_power_w; }},
      {"antenna_spacing_wl", {"d"}, Quantity::kDimensionless,
       [](SystemParams& p) -> Target { return &p.antenna_spacing_wl; }},
      {"target_angle_rad", {"theta"}, Quantity::kAngle,
       [](SystemParams& p) -> Target { return &p.target_angle_rad; }},
      {"ue_tx_power_w", {"P_a"}, Quantity::kPower,
       [](SystemParams& p) -> Target { return &p.ue_tx_power_w; }},
  };
  return kFields;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// A key may carry a unit suffix (`tx_power_dbm`) which is stripped and
// returned as the implied unit of every value.
struct ResolvedKey {
  const Field* field = nullptr;
  std::string implied_unit;
};

ResolvedKey resolve_key(const std::string& raw) {
  for (const Field& f : fields()) {
    if (raw == f.key) return {&f, ""};
    for (const std::string& a : f.aliases) {
      if (raw == a) return {&f, ""};
    }
  }
  static const std::vector<std::pair<std::string, std::string>> kSuffixes = {
      {"_w", ""}, {"_dbw", "dBW"}, {"_dbm", "dBm"}, {"_db", "dB"}};
  const std::string lk = lower(raw);
  for (const auto& [suffix, unit] : kSuffixes) {
    if (lk.size() <= suffix.size() ||
        lk.compare(lk.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    const std::string stem = lk.substr(0, lk.size() - suffix.size());
    for (const Field& f : fields()) {
      if (f.quantity != Quantity::kPower) continue;
      const std::string fstem = f.key.substr(0, f.key.size() - 2);  // "_w"
      if (stem == fstem && !unit.empty() && unit != "dB") return {&f, unit};
    }
  }
  return {};
}

double parse_number(const std::string& key, const std::string& token,
                    std::string* unit) {
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) {
    throw ConfigError(key, "cannot parse number from '" + token + "'");
  }
  *unit = trim(std::string_view(end));
  return value;
}

double convert(const std::string& key, Quantity q, double value,
               const std::string& unit) {
  const auto bad = [&]() -> double {
    throw ConfigError(key, "unit '" + unit + "' not valid here");
  };
  switch (q) {
    case Quantity::kPower:
      if (unit.empty() || unit == "W") return value;
      if (unit == "mW") return value * 1e-3;
      if (unit == "dBW") return dbw_to_watts(value);
      if (unit == "dBm") return dbm_to_watts(value);
      return bad();
    case Quantity::kFrequency:
      if (unit.empty() || unit == "Hz") return value;
      if (unit == "kHz") return value * 1e3;
      if (unit == "MHz") return value * 1e6;
      if (unit == "GHz" || unit == "GHZ") return value * 1e9;
      return bad();
    case Quantity::kTime:
      if (unit.empty() || unit == "s") return value;
      if (unit == "ms") return value * 1e-3;
      return bad();
    case Quantity::kLength:
      if (unit.empty() || unit == "m") return value;
      if (unit == "km") return value * 1e3;
      return bad();
    case Quantity::kAngle:
      if (unit.empty() || unit == "rad") return value;
      if (unit == "deg") return value * M_PI / 180.0;
      return bad();
    case Quantity::kDimensionless:
      if (unit.empty()) return value;
      if (unit == "dB") return db_to_linear(value);
      return bad();
    case Quantity::kDecibel:
      if (unit.empty() || unit == "dB") return value;
      return bad();
    case Quantity::kEnergyCoeff:
      if (unit.empty() || unit == "W/Hz^3") return value;
      if (unit == "W/GHz^3") return value * 1e-27;
      return bad();
    case Quantity::kEnergy:
      if (unit.empty() || unit == "J") return value;
      if (unit == "mJ") return value * 1e-3;
      return bad();
    case Quantity::kCount:
    case Quantity::kFlag:
      break;
  }
  return bad();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

void assign(SystemParams& p, const ResolvedKey& rk, const std::string& key,
            const std::string& raw_value) {
  const Field& f = *rk.field;
  Target target = f.target(p);
  const std::string value = trim(raw_value);
  if (value.empty()) throw ConfigError(key, "empty value");

  if (auto* b = std::get_if<bool*>(&target)) {
    const std::string lv = lower(value);
    if (lv == "true" || lv == "1" || lv == "yes") {
      **b = true;
    } else if (lv == "false" || lv == "0" || lv == "no") {
      **b = false;
    } else {
      throw ConfigError(key, "expected boolean, got '" + value + "'");
    }
    return;
  }
  if (auto* i = std::get_if<int*>(&target)) {
    std::string unit;
    const double d = parse_number(key, value, &unit);
    if (!unit.empty() || d != std::floor(d) || std::abs(d) > 1e9) {
      throw ConfigError(key, "expected an integer count, got '" + value + "'");
    }
    **i = static_cast<int>(d);
    return;
  }

  const std::vector<std::string> tokens = split_list(value);
  std::vector<double> numbers(tokens.size());
  std::vector<std::string> units(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    numbers[i] = parse_number(key, tokens[i], &units[i]);
  }
  // "1, 2, 3 GHz": a unit after the last entry covers the bare ones.
  const std::string trailing = units.empty() ? std::string() : units.back();
  std::vector<double> values;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string unit = units[i].empty() ? trailing : units[i];
    if (!rk.implied_unit.empty()) {
      if (!unit.empty()) throw ConfigError(key, "unit given twice");
      unit = rk.implied_unit;
    }
    values.push_back(convert(key, f.quantity, numbers[i], unit));
  }
  if (auto* d = std::get_if<double*>(&target)) {
    if (values.size() != 1) throw ConfigError(key, "expected a scalar");
    **d = values.front();
    return;
  }
  auto* vec = std::get<std::vector<double>*>(target);
  if (values.size() == 1) {
    vec->assign(static_cast<std::size_t>(p.n_ue), values.front());
  } else if (static_cast<int>(values.size()) == p.n_ue) {
    *vec = values;
  } else {
    throw ConfigError(key, "expected 1 or " + std::to_string(p.n_ue) +
                               " values, got " + std::to_string(values.size()));
  }
  if (f.key == "energy_budget_j") p.energy_budget_auto = false;
}

struct Entry {
  std::string key;
  std::string value;
  ResolvedKey resolved;
};

void apply_entries(SystemParams& p, const std::vector<Entry>& entries) {
  // Counts first so per-UE lists are sized against the final K.
  for (const Entry& e : entries) {
    if (e.resolved.field->key == "n_ue") assign(p, e.resolved, e.key, e.value);
  }
  if (p.n_ue < 1) throw ConfigError("n_ue", "must be >= 1");
  set_ue_count(p, p.n_ue);
  bool explicit_budget = false;
  bool explicit_auto = false;
  for (const Entry& e : entries) {
    if (e.resolved.field->key == "n_ue") continue;
    assign(p, e.resolved, e.key, e.value);
    if (e.resolved.field->key == "energy_budget_j") explicit_budget = true;
    if (e.resolved.field->key == "energy_budget_auto") explicit_auto = true;
  }
  if (explicit_budget && explicit_auto && p.energy_budget_auto) {
    throw ConfigError("energy_budget_auto",
                      "cannot combine with an explicit energy_budget_j");
  }
  refresh_derived(p);
  validate(p);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(key, "must be finite and > 0");
  }
}

void require_nonnegative(const std::string& key, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ConfigError(key, "must be finite and >= 0");
  }
}

}  // namespace

SystemParams default_params() {
  SystemParams p;
  p.tx_power_w = dbw_to_watts(3.0);
  p.noise_var_w = dbm_to_watts(-10.0);
  p.ue_tx_power_w = dbm_to_watts(-6.0);
  set_ue_count(p, p.n_ue);
  return p;
}

void set_ue_count(SystemParams& p, int n_ue) {
  p.n_ue = n_ue;
  const auto fit = [n_ue](std::vector<double>& v, double fallback) {
    const double fill = v.empty() ? fallback : v.front();
    v.resize(static_cast<std::size_t>(std::max(n_ue, 0)), fill);
  };
  fit(p.weight_ue, 1.0);
  fit(p.cpu_freq_hz, kDefaultCpuHz);
  fit(p.cycles_per_bit, kDefaultCycles);
  fit(p.energy_coeff, kDefaultEnergyCoeff);
  fit(p.energy_budget_j, 0.0);
  refresh_derived(p);
}

void refresh_derived(SystemParams& p) {
  if (!p.energy_budget_auto) return;
  p.energy_budget_j.resize(p.cpu_freq_hz.size());
  for (std::size_t k = 0; k < p.energy_budget_j.size(); ++k) {
    const double f = p.cpu_freq_hz[k];
    const double full_compute = p.block_time_s * p.energy_coeff[k] * f * f * f;
    const double full_irs = p.block_time_s * p.n_elements * p.element_power_w;
    p.energy_budget_j[k] = kBudgetFraction * (full_compute + full_irs);
  }
}

void validate(const SystemParams& p) {
  const std::pair<const char*, int> counts[] = {
      {"n_tx", p.n_tx},         {"n_rx_radar", p.n_rx_radar},
      {"n_rx_info", p.n_rx_info}, {"n_ue", p.n_ue},
      {"n_elements", p.n_elements}, {"n_ue_antennas", p.n_ue_antennas}};
  for (const auto& [key, value] : counts) {
    if (value < 1) throw ConfigError(key, "must be >= 1");
  }
  if (p.n_rx_info < p.n_ue) {
    throw ConfigError("n_rx_info", "must be at least n_ue");
  }
  require_positive("tx_power_w", p.tx_power_w);
  require_positive("noise_var_w", p.noise_var_w);
  require_positive("bandwidth_hz", p.bandwidth_hz);
  require_nonnegative("weight_radar", p.weight_radar);
  require_nonnegative("rician_k", p.rician_k);
  if (!std::isfinite(p.pl0_db)) throw ConfigError("pl0_db", "must be finite");
  require_positive("ref_dist_m", p.ref_dist_m);
  require_positive("radar_dist_m", p.radar_dist_m);
  require_positive("ue_avg_dist_m", p.ue_avg_dist_m);
  if (p.ue_avg_dist_m - 10.0 <= 0.0) {
    throw ConfigError("ue_avg_dist_m", "must exceed 10 m");
  }
  require_positive("block_time_s", p.block_time_s);
  require_positive("element_power_w", p.element_power_w);
  require_positive("antenna_spacing_wl", p.antenna_spacing_wl);
  if (!std::isfinite(p.target_angle_rad)) {
    throw ConfigError("target_angle_rad", "must be finite");
  }
  require_positive("ue_tx_power_w", p.ue_tx_power_w);

  const std::size_t k_count = static_cast<std::size_t>(p.n_ue);
  const std::pair<const char*, const std::vector<double>*> per_ue[] = {
      {"weight_ue", &p.weight_ue},
      {"cpu_freq_hz", &p.cpu_freq_hz},
      {"cycles_per_bit", &p.cycles_per_bit},
      {"energy_coeff", &p.energy_coeff},
      {"energy_budget_j", &p.energy_budget_j}};
  for (const auto& [key, vec] : per_ue) {
    if (vec->size() != k_count) {
      throw ConfigError(key, "needs exactly n_ue entries");
    }
  }
  for (std::size_t k = 0; k < k_count; ++k) {
    require_nonnegative("weight_ue", p.weight_ue[k]);
    require_positive("cpu_freq_hz", p.cpu_freq_hz[k]);
    require_positive("cycles_per_bit", p.cycles_per_bit[k]);
    require_positive("energy_coeff", p.energy_coeff[k]);
    require_positive("energy_budget_j", p.energy_budget_j[k]);
    const double irs_floor = p.block_time_s * p.n_elements * p.element_power_w;
    if (!(p.energy_budget_j[k] > irs_floor)) {
      throw ConfigError("energy_budget_j",
                        "must exceed block_time_s * n_elements * "
                        "element_power_w for every UE");
    }
  }
}

SystemParams load_params(std::string_view config_text, SystemParams base) {
  std::vector<Entry> entries;
  std::istringstream in{std::string(config_text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t eq = t.find_first_of("=:");
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) +
                                ": expected 'key = value'");
    }
    Entry e;
    e.key = trim(std::string_view(t).substr(0, eq));
    e.value = trim(std::string_view(t).substr(eq + 1));
    e.resolved = resolve_key(e.key);
    if (e.resolved.field == nullptr) {
      throw ConfigError(e.key, "unknown parameter");
    }
    entries.push_back(std::move(e));
  }
  apply_entries(base, entries);
  return base;
}

SystemParams load_params_file(const std::filesystem::path& path,
                              SystemParams base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_params(buffer.str(), std::move(base));
}

SystemParams apply_overrides(const std::map<std::string, std::string>& kv,
                             SystemParams base) {
  std::vector<Entry> entries;
  for (const auto& [key, value] : kv) {
    Entry e{key, value, resolve_key(key)};
    if (e.resolved.field == nullptr) {
      // Environment keys arrive upper-cased; retry against canonical keys.
      e.resolved = resolve_key(lower(key));
    }
    if (e.resolved.field == nullptr) throw ConfigError(key, "unknown parameter");
    entries.push_back(std::move(e));
  }
  apply_entries(base, entries);
  return base;
}

std::string emit_params(const SystemParams& params) {
  SystemParams p = params;
  std::ostringstream out;
  for (const Field& f : fields()) {
    if (f.key == "energy_budget_j" && p.energy_budget_auto) continue;
    Target t = f.target(p);
    out << f.key << " = ";
    if (auto* i = std::get_if<int*>(&t)) {
      out << **i;
    } else if (auto* d = std::get_if<double*>(&t)) {
      out << format_double(**d);
    } else if (auto* b = std::get_if<bool*>(&t)) {
      out << (**b ? "true" : "false");
    } else {
      const auto& vec = *std::get<std::vector<double>*>(t);
      for (std::size_t k = 0; k < vec.size(); ++k) {
        if (k) out << ", ";
        out << format_double(vec[k]);
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace iscc
