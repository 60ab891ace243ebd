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

#include "polar/llr.hpp"

#include <algorithm>
#include <cmath>

#include "polar/error.hpp"

namespace polar {

LlrFunction::LlrFunction(std::vector<double> v) : values(std::move(v)) {
  if (values.empty()) throw ShapeError("empty llr function");
  values[0] = 0.0;
}

double f_plus(double a, double b, FPlusMode mode) {
  if (a == 0.0 || b == 0.0) return 0.0;
  if (std::isinf(a)) return a > 0 ? b : -b;
  if (std::isinf(b)) return b > 0 ? a : -a;
  double s = ((a > 0) == (b > 0)) ? 1.0 : -1.0;
  double m = std::min(std::fabs(a), std::fabs(b));
  if (mode == FPlusMode::kMinSum) return s * m;
  return s * m + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
}

double f_equal(double a, double b) {
  bool bad = false;
  double r = f_equal_checked(a, b, &bad);
  if (bad) throw ContradictionError("f_equal of +inf and -inf");
  return r;
}

double f_equal_checked(double a, double b, bool* contradiction) {
  if (std::isinf(a) && std::isinf(b) && (a > 0) != (b > 0)) {
    *contradiction = true;
    return 0.0;
  }
  return a + b;
}

void normalized_log_weights(const double* lambda, int q, double* out) {
  bool any_neg_inf = false;
  double lo = kInf;
  for (int t = 0; t < q; ++t) {
    if (lambda[t] == -kInf) any_neg_inf = true;
    lo = std::min(lo, lambda[t]);
  }
  if (any_neg_inf) {
    for (int t = 0; t < q; ++t) out[t] = lambda[t] == -kInf ? 0.0 : -kInf;
    return;
  }
  for (int t = 0; t < q; ++t) out[t] = std::isinf(lambda[t]) ? -kInf : lo - lambda[t];
}

std::vector<double> likelihoods_from_llr(const LlrFunction& l) {
  int q = l.q();
  std::vector<double> lw(q), w(q);
  normalized_log_weights(l.values.data(), q, lw.data());
  double total = 0.0;
  for (int t = 0; t < q; ++t) {
    w[t] = std::exp(lw[t]);
    total += w[t];
  }
  if (!(total > 0.0)) throw DegenerateEvidenceError("every symbol is impossible");
  for (double& x : w) x /= total;
  return w;
}

LlrFunction llr_from_likelihoods(const std::vector<double>& w) {
  std::vector<double> v(w.size());
  for (size_t t = 0; t < w.size(); ++t) {
    if (t == 0) v[t] = 0.0;
    else if (w[0] == 0.0 && w[t] == 0.0) v[t] = kInf;
    else if (w[0] == 0.0) v[t] = -kInf;
    else if (w[t] == 0.0) v[t] = kInf;
    else v[t] = std::log(w[0] / w[t]);
  }
  return LlrFunction(v);
}

}  // namespace polar
