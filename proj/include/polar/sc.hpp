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

#ifndef POLAR_SC_HPP_
#define POLAR_SC_HPP_

#include <vector>

#include "polar/code_spec.hpp"
#include "polar/llr.hpp"

namespace polar {

struct ScOptions {
  FPlusMode fplus = FPlusMode::kExact;
  // Record the llr used at every computed decision.
  bool trace = false;
  // Genie-aided run: the true word is fed back instead of each decision.
  const SymbolVec* genie = nullptr;
};

struct ScTraceEntry {
  int index;  // input index of the decision (first coordinate of a glued group)
  LlrFunction llr;
};

struct ScResult {
  SymbolVec u_hat;
  SymbolVec x_hat;
  // Hard decisions before any genie substitution (frozen values where the
  // decision was skipped).
  SymbolVec raw_decisions;
  // Set when conflicting certain evidence was met; the block is unreliable.
  bool contradiction = false;
  std::vector<ScTraceEntry> trace;
};

bool is_arikan(const Kernel& k);

// Index of the smallest llr among allowed symbols; values within
// kTieTolerance of the minimum go to the lowest symbol.
Symbol pick_min_llr(const double* lam, int n, const std::vector<char>& allowed);

// Recursive SC for the (u+v, v) kernel, base case N = 2.
ScResult decode_sc_arikan(const CodeSpec& spec, const std::vector<double>& llrs,
                          const ScOptions& opt = {});
// SC for any kernel, including glued coordinate groups.
ScResult decode_sc_general(const CodeSpec& spec, const std::vector<LlrFunction>& llrs,
                           const ScOptions& opt = {});
ScResult decode_sc_general(const CodeSpec& spec, const std::vector<double>& binary_llrs,
                           const ScOptions& opt = {});
// Arikan path for the Arikan kernel, general path otherwise.
ScResult decode_sc(const CodeSpec& spec, const std::vector<LlrFunction>& llrs,
                   const ScOptions& opt = {});

// L(t) for the glue group starting at k = decided.size(), t over F^size,
// marginalising every later input. Throws ContractError if k is not the
// start of a group.
LlrFunction kernel_marginal_llr(const KernelPtr& kernel, const std::vector<LlrFunction>& lambda,
                                const SymbolVec& decided);

}  // namespace polar

#endif  // POLAR_SC_HPP_
