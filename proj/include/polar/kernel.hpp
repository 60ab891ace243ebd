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

#ifndef POLAR_KERNEL_HPP_
#define POLAR_KERNEL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polar/gf.hpp"

namespace polar {

using SymbolVec = std::vector<Symbol>;
using Matrix = std::vector<SymbolVec>;

// Consecutive input coordinates [start, start + size) decoded jointly.
struct GlueGroup {
  int start = 0;
  int size = 1;
  bool operator==(const GlueGroup&) const = default;
};

class Kernel {
 public:
  // (u, v) -> (u + v, v).
  static std::shared_ptr<const Kernel> arikan();
  // map u -> u * G. Throws InvalidKernelError if G is singular or the glue
  // is not a consecutive partition.
  static std::shared_ptr<const Kernel> linear(const Matrix& g, AlphabetPtr alphabet,
                                              std::vector<GlueGroup> glue = {});
  // Arbitrary bijection given as a table over packed indices (coordinate 0
  // is the least significant base-q digit). Throws InvalidKernelError if the
  // table is not a bijection.
  static std::shared_ptr<const Kernel> from_map(int ell, AlphabetPtr alphabet,
                                                std::vector<int> table,
                                                std::vector<GlueGroup> glue = {});
  // Binary 4x4 kernel with ones on and above the diagonal.
  static std::shared_ptr<const Kernel> triangular4();
  // q x q Reed-Solomon kernel over GF(q): G[i][j] = e_j^(q-1-i), 0^0 = 1.
  static std::shared_ptr<const Kernel> reed_solomon(int q);

  int ell() const { return ell_; }
  int q() const { return alphabet_->q(); }
  const Alphabet& alphabet() const { return *alphabet_; }
  AlphabetPtr alphabet_ptr() const { return alphabet_; }
  bool is_linear() const { return generator_.has_value(); }
  const Matrix& generator() const;
  const std::vector<GlueGroup>& glue() const { return glue_; }
  bool homogeneous() const;
  // Number of packed inputs, q^ell.
  long long domain_size() const { return domain_; }
  bool has_table() const { return !table_.empty(); }

  void apply(const Symbol* in, Symbol* out) const;
  SymbolVec apply(const SymbolVec& in) const;
  int apply_index(int packed) const;
  bool verify_bijective() const;
  // Index of the glue group that starts at coordinate k, or -1.
  int group_starting_at(int k) const;

  Kernel(int ell, AlphabetPtr alphabet, std::optional<Matrix> g, std::vector<int> table,
         std::vector<GlueGroup> glue);

 private:
  int ell_;
  AlphabetPtr alphabet_;
  std::optional<Matrix> generator_;
  std::vector<int> table_;
  std::vector<GlueGroup> glue_;
  long long domain_;
};

using KernelPtr = std::shared_ptr<const Kernel>;

// Checks that groups are consecutive, non-empty and cover [0, ell). An empty
// list becomes all singletons.
std::vector<GlueGroup> normalize_glue(int ell, std::vector<GlueGroup> glue);

// Rank of a matrix over the alphabet.
int matrix_rank(const Matrix& g, const Alphabet& f);

}  // namespace polar

#endif  // POLAR_KERNEL_HPP_
