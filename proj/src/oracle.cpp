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

#include "polar/oracle.hpp"

#include <cmath>

#include "polar/error.hpp"

namespace polar {

MlResult ml_decode(const CodeSpec& spec, const std::vector<LlrFunction>& llrs) {
  const int n = spec.n_total();
  const int q = spec.q();
  if (static_cast<int>(llrs.size()) != n) throw ShapeError("llr vector has wrong length");
  auto info = spec.info_indices();
  const int k = static_cast<int>(info.size());
  double space = std::pow(static_cast<double>(q), k);
  if (space > static_cast<double>(1 << 20)) throw RefusalError("ML search space too large");
  std::vector<std::vector<double>> logw(n);
  for (int i = 0; i < n; ++i) {
    auto w = likelihoods_from_llr(llrs[i]);
    logw[i].resize(q);
    for (int t = 0; t < q; ++t) logw[i][t] = std::log(w[t]);
  }
  MlResult best;
  best.log_score = -kInf;
  SymbolVec u(n), x(n), digits(k, 0);
  for (int i = 0; i < n; ++i) u[i] = spec.is_frozen(i) ? spec.frozen_value(i) : 0;
  const long long total = static_cast<long long>(space);
  const double tie = std::log1p(kTieTolerance);
  for (long long c = 0; c < total; ++c) {
    for (int d = 0; d < k; ++d) u[info[d]] = digits[d];
    encode_raw(spec.kernel(), n, u.data(), x.data());
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += logw[i][x[i]];
    if (best.candidates == 0 || (s > best.log_score + tie)) {
      best.u = u;
      best.x = x;
      best.log_score = s;
    }
    ++best.candidates;
    // Advance the counter with the first information position most
    // significant, so words come out in lexicographic order.
    for (int d = k - 1; d >= 0; --d) {
      if (++digits[d] < q) break;
      digits[d] = 0;
    }
  }
  best.score = std::exp(best.log_score);
  return best;
}

MlResult ml_decode(const CodeSpec& spec, const std::vector<double>& binary_llrs) {
  std::vector<LlrFunction> l;
  for (double v : binary_llrs) l.push_back(LlrFunction::binary(v));
  return ml_decode(spec, l);
}

LlrFunction marginal_llr_bruteforce(const KernelPtr& kernel, const std::vector<LlrFunction>& lambda,
                                    const SymbolVec& decided) {
  const int ell = kernel->ell();
  const int q = kernel->q();
  const int k = static_cast<int>(decided.size());
  if (static_cast<int>(lambda.size()) != ell) throw ShapeError("need one llr function per kernel output");
  if (std::pow(static_cast<double>(q), ell) > static_cast<double>(1 << 20))
    throw RefusalError("kernel domain too large");
  int gi = kernel->group_starting_at(k);
  if (gi < 0) throw ContractError("decided prefix does not end on a glue group boundary");
  const int s = kernel->glue()[gi].size;
  std::vector<std::vector<double>> w(ell);
  for (int i = 0; i < ell; ++i) w[i] = likelihoods_from_llr(lambda[i]);
  int n_t = 1;
  for (int i = 0; i < s; ++i) n_t *= q;
  int n_suf = 1;
  for (int i = 0; i < ell - k - s; ++i) n_suf *= q;
  std::vector<double> sums(n_t, 0.0);
  SymbolVec u(ell), x(ell);
  for (int i = 0; i < k; ++i) u[i] = decided[i];
  for (int t = 0; t < n_t; ++t) {
    for (int suf = 0; suf < n_suf; ++suf) {
      int a = t;
      for (int i = 0; i < s; ++i, a /= q) u[k + i] = a % q;
      int b = suf;
      for (int i = k + s; i < ell; ++i, b /= q) u[i] = b % q;
      kernel->apply(u.data(), x.data());
      double r = 1.0;
      for (int i = 0; i < ell; ++i) r *= w[i][x[i]];
      sums[t] += r;
    }
  }
  std::vector<double> out(n_t, 0.0);
  for (int t = 1; t < n_t; ++t) {
    if (sums[0] == 0.0 && sums[t] == 0.0) out[t] = 0.0;
    else if (sums[0] == 0.0) out[t] = -kInf;
    else if (sums[t] == 0.0) out[t] = kInf;
    else out[t] = std::log(sums[0] / sums[t]);
  }
  return LlrFunction(out);
}

}  // namespace polar
