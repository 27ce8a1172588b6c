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


#ifndef ISCC_SCHEDULER_HPP_
#define ISCC_SCHEDULER_HPP_

#include <vector>

#include "iscc/params.hpp"
#include "iscc/types.hpp"

namespace iscc {

// Time allocation for the weighted throughput
//   t_c S_c + sum_k t_loc,k S_k
// subject to 0 <= t_c, t_loc,k <= T and
//   t_loc,k eps_k f_k^3 + t_c L mu <= E_k.
// For fixed t_c the best t_loc,k is the energy-capped box value, so the
// objective is concave piecewise linear in t_c; its maximum sits at one of
// the breakpoints, all of which are evaluated. t_loc,k is left at 0 when
// S_k = 0.
TimeAlloc allocate_time(double rate_comm_weighted,
                        const std::vector<double>& rate_local_weighted,
                        const SystemParams& params);

double time_objective(const TimeAlloc& alloc, double rate_comm_weighted,
                      const std::vector<double>& rate_local_weighted);

// Largest feasible t_c, min(T, min_k E_k / (L mu)).
double max_comm_time(const SystemParams& params);

// Best local time for a given t_c.
double local_time_for(int k, double t_comm, const SystemParams& params);

// Offloads the ceil(K/2) UEs with the largest gamma; ties go to the lower
// index.
Schedule select_ues(const std::vector<double>& gamma);

}  // namespace iscc

#endif  // ISCC_SCHEDULER_HPP_
