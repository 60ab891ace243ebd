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

#include "polar/kernel.hpp"

#include <algorithm>

#include "polar/error.hpp"

namespace polar {

namespace {
constexpr long long kMaxTable = 1LL << 20;

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

std::vector<GlueGroup> normalize_glue(int ell, std::vector<GlueGroup> glue) {
  if (glue.empty()) {
    for (int i = 0; i < ell; ++i) glue.push_back({i, 1});
    return glue;
  }
  int next = 0;
  for (const auto& g : glue) {
    if (g.start != next || g.size < 1)
      throw InvalidKernelError("glue groups must be consecutive and cover all inputs");
    next += g.size;
  }
  if (next != ell) throw InvalidKernelError("glue groups must cover all inputs");
  return glue;
}

int matrix_rank(const Matrix& g, const Alphabet& f) {
  Matrix a = g;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    Symbol inv = f.inv(a[rank][c]);
    for (int j = 0; j < cols; ++j) a[rank][j] = f.mul(a[rank][j], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Symbol factor = a[r][c];
      for (int j = 0; j < cols; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

Kernel::Kernel(int ell, AlphabetPtr alphabet, std::optional<Matrix> g, std::vector<int> table,
               std::vector<GlueGroup> glue)
    : ell_(ell),
      alphabet_(std::move(alphabet)),
      generator_(std::move(g)),
      table_(std::move(table)),
      glue_(normalize_glue(ell, std::move(glue))),
      domain_(ipow(alphabet_->q(), ell)) {}

std::shared_ptr<const Kernel> Kernel::arikan() {
  static const KernelPtr k = linear({{1, 0}, {1, 1}}, Alphabet::make(2));
  return k;
}

std::shared_ptr<const Kernel> Kernel::linear(const Matrix& g, AlphabetPtr alphabet,
                                             std::vector<GlueGroup> glue) {
  int ell = static_cast<int>(g.size());
  if (ell < 2) throw InvalidKernelError("kernel dimension must be at least 2");
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != ell)
      throw InvalidKernelError("generator matrix must be square");
    for (Symbol s : row)
      if (!alphabet->contains(s)) throw InvalidKernelError("generator entry outside alphabet");
  }
  if (matrix_rank(g, *alphabet) != ell)
    throw InvalidKernelError("generator matrix is singular");
  long long dom = ipow(alphabet->q(), ell);
  std::vector<int> table;
  if (dom <= kMaxTable) {
    table.resize(dom);
    const Alphabet& f = *alphabet;
    int q = f.q();
    SymbolVec u(ell), x(ell);
    for (long long idx = 0; idx < dom; ++idx) {
      long long t = idx;
      for (int i = 0; i < ell; ++i) {
        u[i] = static_cast<Symbol>(t % q);
        t /= q;
      }
      std::fill(x.begin(), x.end(), 0);
      for (int k = 0; k < ell; ++k) {
        if (u[k] == 0) continue;
        for (int i = 0; i < ell; ++i) x[i] = f.add(x[i], f.mul(u[k], g[k][i]));
      }
      long long out = 0;
      for (int i = ell - 1; i >= 0; --i) out = out * q + x[i];
      table[idx] = static_cast<int>(out);
    }
  }
  return std::make_shared<const Kernel>(ell, std::move(alphabet), g, std::move(table),
                                        std::move(glue));
}

std::shared_ptr<const Kernel> Kernel::from_map(int ell, AlphabetPtr alphabet,
                                               std::vector<int> table,
                                               std::vector<GlueGroup> glue) {
  if (ell < 2) throw InvalidKernelError("kernel dimension must be at least 2");
  long long dom = ipow(alphabet->q(), ell);
  if (dom > kMaxTable) throw InvalidKernelError("map table too large");
  if (static_cast<long long>(table.size()) != dom)
    throw InvalidKernelError("map table must have q^ell entries");
  auto k = std::make_shared<const Kernel>(ell, std::move(alphabet), std::nullopt,
                                          std::move(table), std::move(glue));
  if (!k->verify_bijective()) throw InvalidKernelError("map is not a bijection");
  return k;
}

std::shared_ptr<const Kernel> Kernel::triangular4() {
  static const KernelPtr k =
      linear({{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}, Alphabet::make(2));
  return k;
}

std::shared_ptr<const Kernel> Kernel::reed_solomon(int q) {
  auto f = Alphabet::make(q);
  Matrix g(q, SymbolVec(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) g[i][j] = f->pow(j, q - 1 - i);
  return linear(g, f);
}

const Matrix& Kernel::generator() const {
  if (!generator_) throw UnsupportedError("kernel has no generator matrix");
  return *generator_;
}

bool Kernel::homogeneous() const {
  return std::all_of(glue_.begin(), glue_.end(), [](const GlueGroup& g) { return g.size == 1; });
}

int Kernel::group_starting_at(int k) const {
  for (size_t i = 0; i < glue_.size(); ++i)
    if (glue_[i].start == k) return static_cast<int>(i);
  return -1;
}

int Kernel::apply_index(int packed) const {
  if (!table_.empty()) return table_[packed];
  int q = alphabet_->q();
  SymbolVec u(ell_), x(ell_);
  for (int i = 0; i < ell_; ++i) {
    u[i] = packed % q;
    packed /= q;
  }
  apply(u.data(), x.data());
  int out = 0;
  for (int i = ell_ - 1; i >= 0; --i) out = out * q + x[i];
  return out;
}

void Kernel::apply(const Symbol* in, Symbol* out) const {
  int q = alphabet_->q();
  if (!table_.empty()) {
    long long idx = 0;
    for (int i = ell_ - 1; i >= 0; --i) idx = idx * q + in[i];
    long long o = table_[idx];
    for (int i = 0; i < ell_; ++i) {
      out[i] = static_cast<Symbol>(o % q);
      o /= q;
    }
    return;
  }
  const Alphabet& f = *alphabet_;
  const Matrix& g = *generator_;
  for (int i = 0; i < ell_; ++i) out[i] = 0;
  for (int k = 0; k < ell_; ++k) {
    if (in[k] == 0) continue;
    for (int i = 0; i < ell_; ++i) out[i] = f.add(out[i], f.mul(in[k], g[k][i]));
  }
}

SymbolVec Kernel::apply(const SymbolVec& in) const {
  if (static_cast<int>(in.size()) != ell_) throw ShapeError("kernel input has wrong length");
  for (Symbol s : in)
    if (!alphabet_->contains(s)) throw DomainError("symbol outside alphabet");
  SymbolVec out(ell_);
  apply(in.data(), out.data());
  return out;
}

bool Kernel::verify_bijective() const {
  if (domain_ > kMaxTable) throw RefusalError("domain too large for exhaustive check");
  std::vector<char> seen(domain_, 0);
  for (long long i = 0; i < domain_; ++i) {
    int o = apply_index(static_cast<int>(i));
    if (o < 0 || o >= domain_ || seen[o]) return false;
    seen[o] = 1;
  }
  return true;
}

}  // namespace polar
