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


#include "iscc/complexity.hpp"

#include <cmath>
#include <stdexcept>

namespace iscc {

namespace {

double ipm_cost(double k, double q, double n, double eps) {
  return std::sqrt(3.0 * k * q) / eps *
         (8.0 * n * k * q * q * q + 4.0 * n * n * k * q * q + 4.0 * (n * n + n) * k * q);
}

}  // namespace

ComplexityEstimate estimate(const SystemParams& p, double epsilon, int iters) {
  if (!(epsilon > 0.0) || iters < 1) {
    throw std::invalid_argument("estimate: epsilon and iters must be positive");
  }
  const double k = p.n_ue;
  const double q = p.n_elements + 1.0;
  ComplexityEstimate c;
  c.n1 = 4.0 * k * q * q;
  c.n2 = 4.0 * q * q;
  c.iters = iters;
  c.flops_joint_step = ipm_cost(k, q, c.n1, epsilon);
  c.flops_ue_step = ipm_cost(1.0, q, c.n2, epsilon);
  c.flops_partial = iters * c.flops_joint_step;
  c.flops_binary = iters * k * c.flops_ue_step;
  return c;
}

nlohmann::json to_json(const ComplexityEstimate& c) {
  return {{"flops_joint_step", c.flops_joint_step},         {"flops_ue_step", c.flops_ue_step},
          {"flops_partial", c.flops_partial}, {"flops_binary", c.flops_binary},
          {"n1", c.n1},                       {"n2", c.n2},
          {"iters", c.iters}};
}

}  // namespace iscc
