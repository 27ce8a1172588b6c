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


#ifndef ISCC_RESULT_IO_HPP_
#define ISCC_RESULT_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "iscc/params.hpp"
#include "iscc/types.hpp"

namespace iscc {

nlohmann::json params_to_json(const SystemParams& params);
nlohmann::json result_to_json(const WtcResult& r);

// One CSV line per run.
std::string csv_header();
std::string csv_row(const WtcResult& r);

// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Linear-interpolation quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> sample, double q);

struct PlotPoint {
  double x = 0.0;
  std::vector<double> y;
};

// Whitespace-separated "x median q25 q75" lines after '#' comment lines.
std::string plot_data(const std::vector<std::string>& comments,
                      const std::vector<PlotPoint>& points);

}  // namespace iscc

#endif  // ISCC_RESULT_IO_HPP_
