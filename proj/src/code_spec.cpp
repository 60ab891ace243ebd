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

#include "polar/code_spec.hpp"

#include <algorithm>

#include "polar/error.hpp"

namespace polar {

CodeSpec::CodeSpec(KernelPtr kernel, int m) : kernel_(std::move(kernel)), m_(m) {
  if (!kernel_) throw ContractError("null kernel");
  if (m < 1) throw ParameterError("level count must be at least 1");
  long long n = 1;
  for (int i = 0; i < m; ++i) {
    n *= kernel_->ell();
    if (n > (1LL << 24)) throw ParameterError("code too long");
  }
  n_ = static_cast<int>(n);
  frozen_.assign(n_, 0);
  frozen_value_.assign(n_, 0);
}

void CodeSpec::freeze(int i, Symbol value) {
  if (i < 0 || i >= n_) throw ShapeError("frozen index out of range");
  if (!kernel_->alphabet().contains(value)) throw DomainError("frozen value outside alphabet");
  frozen_[i] = 1;
  frozen_value_[i] = value;
}

void CodeSpec::unfreeze(int i) {
  if (i < 0 || i >= n_) throw ShapeError("frozen index out of range");
  frozen_[i] = 0;
  frozen_value_[i] = 0;
}

void CodeSpec::clear_frozen() {
  std::fill(frozen_.begin(), frozen_.end(), 0);
  std::fill(frozen_value_.begin(), frozen_value_.end(), 0);
}

int CodeSpec::num_frozen() const {
  return static_cast<int>(std::count(frozen_.begin(), frozen_.end(), 1));
}

double CodeSpec::rate() const { return static_cast<double>(num_info()) / n_; }

std::vector<int> CodeSpec::frozen_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (frozen_[i]) out.push_back(i);
  return out;
}

std::vector<int> CodeSpec::info_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (!frozen_[i]) out.push_back(i);
  return out;
}

CodeSpec CodeSpec::outer(int r) const {
  if (m_ < 2) throw ContractError("outer code of a single-level code");
  CodeSpec o(kernel_, m_ - 1);
  int len = o.n_;
  for (int i = 0; i < len; ++i) {
    o.frozen_[i] = frozen_[r * len + i];
    o.frozen_value_[i] = frozen_value_[r * len + i];
  }
  return o;
}

void CodeSpec::check_input(const SymbolVec& u) const {
  if (static_cast<int>(u.size()) != n_) throw ShapeError("input word has wrong length");
  const Alphabet& f = kernel_->alphabet();
  for (int i = 0; i < n_; ++i) {
    if (!f.contains(u[i])) throw DomainError("symbol outside alphabet");
    if (frozen_[i] && u[i] != frozen_value_[i])
      throw ContractError("input disagrees with frozen value at " + std::to_string(i));
  }
}

SymbolVec CodeSpec::expand(const SymbolVec& info) const {
  if (static_cast<int>(info.size()) != num_info()) throw ShapeError("wrong payload length");
  SymbolVec u(frozen_value_);
  size_t k = 0;
  for (int i = 0; i < n_; ++i)
    if (!frozen_[i]) u[i] = info[k++];
  return u;
}

SymbolVec CodeSpec::extract(const SymbolVec& u) const {
  SymbolVec info;
  for (int i = 0; i < n_; ++i)
    if (!frozen_[i]) info.push_back(u[i]);
  return info;
}

void encode_raw(const Kernel& k, int n, const Symbol* u, Symbol* x) {
  int ell = k.ell();
  if (n == 1) {
    x[0] = u[0];
    return;
  }
  if (n == ell) {
    k.apply(u, x);
    return;
  }
  int len = n / ell;
  std::vector<Symbol> gamma(n);
  for (int r = 0; r < ell; ++r) encode_raw(k, len, u + r * len, gamma.data() + r * len);
  std::vector<Symbol> col(ell), out(ell);
  for (int j = 0; j < len; ++j) {
    for (int r = 0; r < ell; ++r) col[r] = gamma[r * len + j];
    k.apply(col.data(), out.data());
    for (int i = 0; i < ell; ++i) x[j * ell + i] = out[i];
  }
}

SymbolVec encode(const CodeSpec& spec, const SymbolVec& u) {
  spec.check_input(u);
  SymbolVec x(u.size());
  encode_raw(spec.kernel(), spec.n_total(), u.data(), x.data());
  return x;
}

Matrix encode_matrix(const CodeSpec& spec) {
  if (!spec.kernel().is_linear()) throw UnsupportedError("encode_matrix needs a linear kernel");
  int n = spec.n_total();
  Matrix m(n, SymbolVec(n));
  SymbolVec e(n, 0);
  for (int k = 0; k < n; ++k) {
    e[k] = 1;
    encode_raw(spec.kernel(), n, e.data(), m[k].data());
    e[k] = 0;
  }
  return m;
}

SymbolVec vec_mat_mul(const SymbolVec& u, const Matrix& m, const Alphabet& f) {
  if (u.size() != m.size()) throw ShapeError("dimension mismatch");
  size_t cols = m.empty() ? 0 : m[0].size();
  SymbolVec x(cols, 0);
  for (size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    for (size_t j = 0; j < cols; ++j) x[j] = f.add(x[j], f.mul(u[k], m[k][j]));
  }
  return x;
}

}  // namespace polar
