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

#ifndef POLAR_CHANNEL_HPP_
#define POLAR_CHANNEL_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polar/kernel.hpp"
#include "polar/llr.hpp"

namespace polar {

using Rng = std::mt19937_64;

struct ChannelModel {
  enum class Kind { kBec, kBsc, kBiAwgn };
  Kind kind = Kind::kBec;
  double param = 0.5;  // erasure probability, crossover probability, or sigma

  static ChannelModel bec(double eps);
  static ChannelModel bsc(double p);
  static ChannelModel biawgn(double sigma);
  // "bec:0.5", "bsc:0.1", "awgn:0.8". Throws ParameterError.
  static ChannelModel parse(const std::string& text);
  std::string name() const;
  std::string to_string() const;
};

// Binary llr log(P(y|0)/P(y|1)) per position. Throws DomainError for
// symbols other than 0/1.
std::vector<double> transmit(const ChannelModel& ch, const SymbolVec& x, Rng& rng);
std::vector<double> transmit(const ChannelModel& ch, const SymbolVec& x, std::uint64_t seed);

// Seed for sub-stream `index` of `seed` (splitmix64 mixing), so that trial
// outcomes do not depend on how trials are spread over threads.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::vector<LlrFunction> to_llr_functions(const std::vector<double>& binary_llrs);

}  // namespace polar

#endif  // POLAR_CHANNEL_HPP_
