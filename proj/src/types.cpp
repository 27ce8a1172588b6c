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

#include "iscc/types.hpp"

#include <array>
#include <utility>

namespace iscc {

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 6> kSchemeNames{{
    {Scheme::kJoint, "joint"},
    {Scheme::kMrt, "mrt"},
    {Scheme::kAntenna, "antenna"},
    {Scheme::kReflective, "reflective"},
    {Scheme::kDiscrete4, "discrete4"},
    {Scheme::kDiscrete8, "discrete8"},
}};

}  // namespace

std::string_view to_string(Strategy s) {
  return s == Strategy::kPartial ? "partial" : "binary";
}

std::string_view to_string(Scheme s) {
  for (const auto& [scheme, name] : kSchemeNames) {
    if (scheme == s) return name;
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "partial") return Strategy::kPartial;
  if (name == "binary") return Strategy::kBinary;
  throw ConfigError("strategy", "unknown strategy '" + std::string(name) + "'");
}

Scheme parse_scheme(std::string_view name) {
  for (const auto& [scheme, label] : kSchemeNames) {
    if (label == name) return scheme;
  }
  throw ConfigError("scheme", "unknown scheme '" + std::string(name) + "'");
}

}  // namespace iscc
