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

#ifndef POLAR_ORACLE_HPP_
#define POLAR_ORACLE_HPP_

#include <vector>

#include "polar/code_spec.hpp"
#include "polar/llr.hpp"

namespace polar {

struct MlResult {
  SymbolVec u;
  SymbolVec x;
  // Product of per-position normalised likelihoods of x; 1 for noiseless
  // evidence.
  double score = 0.0;
  double log_score = 0.0;
  long long candidates = 0;
};

// Exhaustive maximum-likelihood decoding over all information words.
// Near-ties (relative 1e-9) go to the lexicographically smallest u. Throws
// RefusalError beyond 2^20 candidates.
MlResult ml_decode(const CodeSpec& spec, const std::vector<LlrFunction>& llrs);
MlResult ml_decode(const CodeSpec& spec, const std::vector<double>& binary_llrs);

// Direct-sum evaluation of the marginal llr of the glue group starting at
// decided.size(). Independent of the streaming implementation.
LlrFunction marginal_llr_bruteforce(const KernelPtr& kernel, const std::vector<LlrFunction>& lambda,
                                    const SymbolVec& decided);

}  // namespace polar

#endif  // POLAR_ORACLE_HPP_
