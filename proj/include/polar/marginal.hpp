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

#ifndef POLAR_MARGINAL_HPP_
#define POLAR_MARGINAL_HPP_

#include <cmath>
#include <memory>
#include <vector>

#include "polar/kernel.hpp"
#include "polar/llr.hpp"

namespace polar {

// The kernel applied independently to each of w lanes. A lane symbol is an
// integer in [0, q^w) whose base-q digit l is lane l.
class LaneKernel {
 public:
  // Cached per (kernel, w). Throws RefusalError when (q^w)^ell > 2^22.
  static std::shared_ptr<const LaneKernel> get(const KernelPtr& kernel, int width);

  int ell() const { return ell_; }
  int q() const { return q_; }
  int width() const { return width_; }
  int alphabet_size() const { return big_q_; }
  long long domain() const { return domain_; }
  // Outputs for the packed input sum_i u_i * Q^i.
  const int* outputs(long long packed) const { return &table_[packed * ell_]; }
  void apply(const Symbol* in, Symbol* out) const;

  LaneKernel(const KernelPtr& kernel, int width);

 private:
  int ell_, q_, width_, big_q_;
  long long domain_;
  std::vector<int> table_;
};

// Streaming log(sum exp(term)).
struct LogSumAcc {
  double max = -kInf;
  double sum = 0.0;
  void add(double term) {
    if (term == -kInf) return;
    if (term > max) {
      sum = sum * std::exp(max - term) + 1.0;
      max = term;
    } else {
      sum += std::exp(term - max);
    }
  }
  double value() const { return max == -kInf ? -kInf : max + std::log(sum); }
};

// L(t) = A(0) - A(t) with the conventions: both -inf gives 0 and flags a
// contradiction, A(0) = -inf gives -inf, A(t) = -inf gives +inf.
void llr_from_logsums(const double* a, int n, double* out, bool* contradiction);

// Marginal llr over the s inputs starting at k, given packed prefix symbols
// of inputs [0, k) and log-weights lw[i][.] for each kernel output i.
// Enumerates target values in the outer loop and suffixes (first suffix
// coordinate least significant) in the inner loop.
void lane_marginal_llr(const LaneKernel& lk, const double* const* lw, long long prefix_packed,
                       int k, int s, double* out, bool* contradiction);

// Likelihood-domain analogue: out[t] = sum over suffixes of prod_i pi[i][out_i].
void lane_marginal_prob(const LaneKernel& lk, const double* const* pi, long long prefix_packed,
                        int k, int s, double* out);

// Lane-wise version of encode_raw.
void lane_encode(const LaneKernel& lk, int n, const Symbol* u, Symbol* x);

long long ipow_ll(long long b, int e);

}  // namespace polar

#endif  // POLAR_MARGINAL_HPP_
