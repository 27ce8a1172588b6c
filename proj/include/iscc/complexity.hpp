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


#ifndef ISCC_COMPLEXITY_HPP_
#define ISCC_COMPLEXITY_HPP_

#include <json.hpp>

#include "iscc/params.hpp"

namespace iscc {

// Interior-point operation-count estimates for the passive step and for the
// whole alternating loop. With q = L + 1 and n1 = 4 K q^2,
//   C_joint = sqrt(3 K q) / eps * [8 n1 K q^3 + 4 n1^2 K q^2 + 4 (n1^2 + n1) K q].
// The binary pipeline solves K independent single-UE problems, so its
// per-problem estimate is the same expression with K = 1 (n2 = 4 q^2).
// These are documentation figures; the solver never uses them.
struct ComplexityEstimate {
  double flops_joint_step = 0.0;  // joint passive step, one iteration
  double flops_ue_step = 0.0;  // single-UE passive step, one iteration
  double flops_partial = 0.0;  // iters * flops_joint_step
  double flops_binary = 0.0;   // iters * K * flops_ue_step
  double n1 = 0.0;
  double n2 = 0.0;
  int iters = 0;
};

ComplexityEstimate estimate(const SystemParams& params, double epsilon, int iters);

nlohmann::json to_json(const ComplexityEstimate& c);

}  // namespace iscc

#endif  // ISCC_COMPLEXITY_HPP_
