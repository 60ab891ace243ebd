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

#ifndef POLAR_LLR_HPP_
#define POLAR_LLR_HPP_

#include <limits>
#include <vector>

#include "polar/gf.hpp"

namespace polar {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Decisions treat values within this distance as ties, so that two
// evaluation orders of the same quantity decide alike.
inline constexpr double kTieTolerance = 1e-9;

// lambda(t) = log(P(y|0) / P(y|t)); lambda(0) is always 0.
struct LlrFunction {
  std::vector<double> values;

  LlrFunction() : values(2, 0.0) {}
  explicit LlrFunction(std::vector<double> v);
  static LlrFunction binary(double l) { return LlrFunction({0.0, l}); }
  static LlrFunction uniform(int q) { return LlrFunction(std::vector<double>(q, 0.0)); }

  int q() const { return static_cast<int>(values.size()); }
  double operator[](int t) const { return values[t]; }
};

enum class FPlusMode { kExact, kMinSum };

// 2 atanh(tanh(a/2) tanh(b/2)), with f(+-inf, z) = +-z.
double f_plus(double a, double b, FPlusMode mode = FPlusMode::kExact);
// a + b with +-inf absorbing. Throws ContradictionError on +inf + -inf.
double f_equal(double a, double b);
// As f_equal, but returns 0 and sets *contradiction on conflicting infinities.
double f_equal_checked(double a, double b, bool* contradiction);

// 0 unless l is below -kTieTolerance.
inline Symbol decide_binary(double l) { return l >= -kTieTolerance ? 0 : 1; }

// Weights exp(-lambda(t)) normalised to sum 1. When some lambda(t) = -inf the
// mass is split evenly over those symbols. Throws DegenerateEvidenceError if
// every symbol is impossible.
std::vector<double> likelihoods_from_llr(const LlrFunction& l);
// Inverse map; zero weight for symbol 0 gives -inf for every possible t.
LlrFunction llr_from_likelihoods(const std::vector<double>& w);

// log-weights -lambda(t) shifted so that the largest is 0 (or -inf entries
// for impossible symbols).
void normalized_log_weights(const double* lambda, int q, double* out);

}  // namespace polar

#endif  // POLAR_LLR_HPP_
