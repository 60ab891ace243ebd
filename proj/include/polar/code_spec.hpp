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

#ifndef POLAR_CODE_SPEC_HPP_
#define POLAR_CODE_SPEC_HPP_

#include <vector>

#include "polar/kernel.hpp"

namespace polar {

class CodeSpec {
 public:
  CodeSpec() = default;
  // A code of length ell^m with no frozen coordinates.
  CodeSpec(KernelPtr kernel, int m);

  const Kernel& kernel() const { return *kernel_; }
  const KernelPtr& kernel_ptr() const { return kernel_; }
  int m() const { return m_; }
  int n_total() const { return n_; }
  int ell() const { return kernel_->ell(); }
  int q() const { return kernel_->q(); }

  bool is_frozen(int i) const { return frozen_[i] != 0; }
  Symbol frozen_value(int i) const { return frozen_value_[i]; }
  void freeze(int i, Symbol value = 0);
  void unfreeze(int i);
  void clear_frozen();
  int num_frozen() const;
  int num_info() const { return n_ - num_frozen(); }
  double rate() const;
  std::vector<int> frozen_indices() const;
  std::vector<int> info_indices() const;

  // The length ell^(m-1) code used as outer code r (its frozen set is
  // [r*N/ell, (r+1)*N/ell) of this one).
  CodeSpec outer(int r) const;

  // Throws ShapeError / DomainError / ContractError.
  void check_input(const SymbolVec& u) const;
  // Writes the information symbols into the unfrozen positions of a word
  // that carries the frozen values elsewhere.
  SymbolVec expand(const SymbolVec& info) const;
  SymbolVec extract(const SymbolVec& u) const;

 private:
  KernelPtr kernel_;
  int m_ = 0;
  int n_ = 0;
  std::vector<char> frozen_;
  SymbolVec frozen_value_;
};

// x = g^(m)(u). Outer code r takes u[r*N/ell, (r+1)*N/ell); output column j
// of the inner map is x[j*ell .. j*ell + ell).
SymbolVec encode(const CodeSpec& spec, const SymbolVec& u);
// Same recursion without frozen-value checks.
void encode_raw(const Kernel& k, int n, const Symbol* u, Symbol* x);
// N x N matrix M with encode(u) = u * M. Linear kernels only.
Matrix encode_matrix(const CodeSpec& spec);
SymbolVec vec_mat_mul(const SymbolVec& u, const Matrix& m, const Alphabet& f);

}  // namespace polar

#endif  // POLAR_CODE_SPEC_HPP_
