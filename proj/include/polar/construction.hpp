// Copyright 2026 The polarbench Authors.
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

#ifndef POLAR_CONSTRUCTION_HPP_
#define POLAR_CONSTRUCTION_HPP_

#include <cstdint>
#include <vector>

#include "polar/channel.hpp"
#include "polar/code_spec.hpp"

namespace polar {

// Erasure probability of every input coordinate of the Arikan code of
// length 2^m over BEC(eps): the first half gets 2z - z^2, the second z^2.
std::vector<double> bec_erasure_probabilities(int m, double eps);

// Number of coordinates to freeze for a target rate.
int frozen_count(int n, double rate);

// Freezes (to 0) the coordinates ranked worst first; ties freeze the lower
// index first.
CodeSpec freeze_worst(const CodeSpec& base, const std::vector<double>& badness, double rate);

// Arikan kernel only; throws UnsupportedError otherwise.
CodeSpec construct_bec(const CodeSpec& base, double eps, double rate);

// Per-coordinate decision errors of genie-aided SC (the true prefix is fed
// back). Frozen coordinates carry their frozen values and never count. Trial t uses
// derive_seed(seed, t).
std::vector<long long> genie_error_counts(const CodeSpec& base, const ChannelModel& ch,
                                          long long trials, std::uint64_t seed, int jobs = 1);

// Throws ParameterError for trials == 0.
CodeSpec construct_montecarlo(const CodeSpec& base, const ChannelModel& ch, double rate,
                              long long trials, std::uint64_t seed, int jobs = 1);

}  // namespace polar

#endif  // POLAR_CONSTRUCTION_HPP_
