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


#ifndef ISCC_AO_HPP_
#define ISCC_AO_HPP_

#include <cstdint>

#include "iscc/channel.hpp"
#include "iscc/params.hpp"
#include "iscc/sdp.hpp"
#include "iscc/types.hpp"

namespace iscc {

struct AoConfig {
  double epsilon = 1e-3;  // relative improvement that ends the loop
  int max_iters = 100;
  int n_random = 50;      // Gaussian randomizations per rank-one recovery
  Scheme scheme = Scheme::kJoint;
  Strategy strategy = Strategy::kPartial;
  bool keep_best = true;
  std::uint64_t seed = 0;  // initial phases and randomization draws
  SdpOptions sdp;
};

void validate(const AoConfig& cfg);

// Closed-form radar tracking beams shared by the MRT, Reflective and Antenna
// benchmarks: w = 1 / N_r, x = sqrt(P) (w^H Lr)^H / ||w^H Lr||.
BeamState mrt_beams(const ChannelRealization& ch, const SystemParams& params);

BeamState initial_state(const ChannelRealization& ch, const SystemParams& params,
                        const AoConfig& cfg);

// Alternating optimization over (aux, x, V [, xi], w) followed by the time
// allocation. The scheme decides which blocks are free; the strategy picks the
// offloading model. Every iteration appends the weighted log-rate of the
// accepted state to the trace, which is nondecreasing when keep_best is set.
WtcResult run_scheme(const ChannelRealization& ch, const SystemParams& params,
                     const AoConfig& cfg);

WtcResult run_partial(const ChannelRealization& ch, const SystemParams& params,
                      AoConfig cfg);
WtcResult run_binary(const ChannelRealization& ch, const SystemParams& params,
                     AoConfig cfg);
WtcResult run_benchmark(Scheme scheme, const ChannelRealization& ch,
                        const SystemParams& params, AoConfig cfg);


}  // namespace iscc

#endif  // ISCC_AO_HPP_
