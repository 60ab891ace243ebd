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

#ifndef POLAR_BP_HPP_
#define POLAR_BP_HPP_

#include <array>
#include <vector>

#include "polar/code_spec.hpp"
#include "polar/llr.hpp"

namespace polar {

// Messages of one (u+v, v) butterfly realization: a0 is the adder node, e1
// the equality node.
struct ButterflyMessages {
  double u_in = 0, v_in = 0, x0_in = 0, x1_in = 0;
  double u_out = 0, v_out = 0, x0_out = 0, x1_out = 0;
  double e1_a0 = 0, a0_e1 = 0;
};

enum class BpMsg { kE1A0 = 0, kA0E1, kUOut, kVOut, kX0Out, kX1Out };
inline constexpr int kBpMsgKinds = 6;
const char* bp_msg_name(BpMsg m);

// Finite inputs are clipped to +-40 before f_plus.
double bp_fplus(double a, double b);
// Computes one message from the current inputs and stores it. On +inf/-inf
// conflict: sets *contradiction if given, else throws ContradictionError.
double bp_butterfly_update(ButterflyMessages& m, BpMsg which, bool* contradiction = nullptr);

struct MessageCounts {
  // [level][kind]; level 0 is the channel side.
  std::vector<std::array<long long, kBpMsgKinds>> by_level;
  long long total(BpMsg m) const;
};

// Level k holds 2^k realizations of N/2^(k+1) butterflies each; realization
// id 2p + o is outer code o of realization p one level up.
struct BpState {
  int n = 0;
  int levels = 0;
  std::vector<std::vector<ButterflyMessages>> level;
  int iterations = 0;

  explicit BpState(const CodeSpec& spec);
  BpState() = default;
  ButterflyMessages& at(int k, int id, int i) { return level[k][static_cast<size_t>(id) * (n >> (k + 1)) + i]; }
  // Zeroes every stored message except v_in.
  void clear_transient();
  // Message values over the whole state (for closure tests).
  std::vector<double> all_values() const;
};

struct BpIterationResult {
  SymbolVec u_hat;
  bool contradiction = false;
  bool frozen_consistent = false;  // every frozen estimate has the right strict sign
};

// One GCC-schedule iteration. Arikan kernel only.
BpIterationResult bp_iteration(const CodeSpec& spec, BpState& state, const std::vector<double>& llrs,
                               MessageCounts* counts = nullptr);

enum class StopRule { kNone, kFrozenConsistency, kUnchanged, kEither };

struct BpResult {
  SymbolVec u_hat;
  SymbolVec x_hat;
  int iterations = 0;
  bool converged = false;
  bool contradiction = false;
};

struct BpOptions {
  StopRule stop = StopRule::kEither;
  // Clear every message except v_in between iterations.
  bool clear_transient = false;
};

BpResult bp_decode(const CodeSpec& spec, const std::vector<double>& llrs, int max_iters,
                   StopRule stop = StopRule::kEither);
BpResult bp_decode(const CodeSpec& spec, const std::vector<double>& llrs, int max_iters,
                   const BpOptions& opt);

}  // namespace polar

#endif  // POLAR_BP_HPP_
