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

#include "polar/marginal.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "polar/error.hpp"

namespace polar {

long long ipow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

LaneKernel::LaneKernel(const KernelPtr& kernel, int width)
    : ell_(kernel->ell()), q_(kernel->q()), width_(width) {
  long long bq = ipow_ll(q_, width);
  long long dom = ipow_ll(bq, ell_);
  if (width < 1 || bq > (1 << 22) || dom > (1LL << 22))
    throw RefusalError("lane kernel domain too large");
  big_q_ = static_cast<int>(bq);
  domain_ = dom;
  table_.resize(dom * ell_);
  std::vector<Symbol> in(ell_), lane_in(ell_), lane_out(ell_);
  for (long long idx = 0; idx < dom; ++idx) {
    long long t = idx;
    for (int i = 0; i < ell_; ++i) {
      in[i] = static_cast<Symbol>(t % big_q_);
      t /= big_q_;
    }
    int* out = &table_[idx * ell_];
    for (int i = 0; i < ell_; ++i) out[i] = 0;
    int place = 1;
    for (int l = 0; l < width; ++l) {
      for (int i = 0; i < ell_; ++i) lane_in[i] = (in[i] / place) % q_;
      kernel->apply(lane_in.data(), lane_out.data());
      for (int i = 0; i < ell_; ++i) out[i] += lane_out[i] * place;
      place *= q_;
    }
  }
}

std::shared_ptr<const LaneKernel> LaneKernel::get(const KernelPtr& kernel, int width) {
  static std::mutex mu;
  static std::map<std::pair<const Kernel*, int>,
                  std::pair<KernelPtr, std::shared_ptr<const LaneKernel>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kernel.get(), width);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.second;
  auto lk = std::make_shared<const LaneKernel>(kernel, width);
  cache[key] = {kernel, lk};
  return lk;
}

void LaneKernel::apply(const Symbol* in, Symbol* out) const {
  long long idx = 0;
  for (int i = ell_ - 1; i >= 0; --i) idx = idx * big_q_ + in[i];
  const int* o = outputs(idx);
  for (int i = 0; i < ell_; ++i) out[i] = o[i];
}

void llr_from_logsums(const double* a, int n, double* out, bool* contradiction) {
  bool any = false;
  for (int t = 0; t < n; ++t) any = any || a[t] != -kInf;
  if (!any) {
    std::fill(out, out + n, 0.0);
    *contradiction = true;
    return;
  }
  out[0] = 0.0;
  for (int t = 1; t < n; ++t) {
    if (a[t] == -kInf) out[t] = kInf;
    else if (a[0] == -kInf) out[t] = -kInf;
    else out[t] = a[0] - a[t];
  }
}

void lane_marginal_llr(const LaneKernel& lk, const double* const* lw, long long prefix_packed,
                       int k, int s, double* out, bool* contradiction) {
  const int ell = lk.ell();
  const long long bq = lk.alphabet_size();
  const long long n_t = ipow_ll(bq, s);
  const long long n_suf = ipow_ll(bq, ell - k - s);
  const long long t_stride = ipow_ll(bq, k);
  const long long suf_stride = t_stride * n_t;
  std::vector<double> a(n_t);
  for (long long t = 0; t < n_t; ++t) {
    LogSumAcc acc;
    for (long long suf = 0; suf < n_suf; ++suf) {
      const int* o = lk.outputs(prefix_packed + t * t_stride + suf * suf_stride);
      double term = 0.0;
      for (int i = 0; i < ell; ++i) term += lw[i][o[i]];
      acc.add(term);
    }
    a[t] = acc.value();
  }
  llr_from_logsums(a.data(), static_cast<int>(n_t), out, contradiction);
}

void lane_marginal_prob(const LaneKernel& lk, const double* const* pi, long long prefix_packed,
                        int k, int s, double* out) {
  const int ell = lk.ell();
  const long long bq = lk.alphabet_size();
  const long long n_t = ipow_ll(bq, s);
  const long long n_suf = ipow_ll(bq, ell - k - s);
  const long long t_stride = ipow_ll(bq, k);
  const long long suf_stride = t_stride * n_t;
  for (long long t = 0; t < n_t; ++t) {
    double total = 0.0;
    for (long long suf = 0; suf < n_suf; ++suf) {
      const int* o = lk.outputs(prefix_packed + t * t_stride + suf * suf_stride);
      double prod = 1.0;
      for (int i = 0; i < ell; ++i) prod *= pi[i][o[i]];
      total += prod;
    }
    out[t] = total;
  }
}

void lane_encode(const LaneKernel& lk, int n, const Symbol* u, Symbol* x) {
  const int ell = lk.ell();
  if (n == 1) {
    x[0] = u[0];
    return;
  }
  if (n == ell) {
    lk.apply(u, x);
    return;
  }
  const int len = n / ell;
  std::vector<Symbol> gamma(n), col(ell), out(ell);
  for (int r = 0; r < ell; ++r) lane_encode(lk, len, u + r * len, gamma.data() + r * len);
  for (int j = 0; j < len; ++j) {
    for (int r = 0; r < ell; ++r) col[r] = gamma[r * len + j];
    lk.apply(col.data(), out.data());
    for (int i = 0; i < ell; ++i) x[j * ell + i] = out[i];
  }
}

}  // namespace polar
