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

#ifndef POLAR_SCL_HPP_
#define POLAR_SCL_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "polar/code_spec.hpp"
#include "polar/crc.hpp"
#include "polar/llr.hpp"

namespace polar {

// Likelihood matrices Pi^(b), b in [0, q), each rows x cols; only rows
// [0, rho_in) are read.
struct ListState {
  int q = 2;
  int rows = 1;
  int cols = 0;
  int rho_in = 1;
  std::vector<double> pi;  // [row][col][symbol]

  ListState() = default;
  ListState(int q, int rows, int cols);
  double& at(int r, int c, int b) { return pi[(static_cast<size_t>(r) * cols + c) * q + b]; }
  double at(int r, int c, int b) const { return pi[(static_cast<size_t>(r) * cols + c) * q + b]; }

  static ListState from_llrs(const std::vector<LlrFunction>& llrs);
  static ListState from_binary_llrs(const std::vector<double>& llrs);
};

struct ListResult {
  std::vector<SymbolVec> u_list;
  std::vector<SymbolVec> x_list;
  std::vector<int> s;       // source row of each output row
  int rho_out = 0;
  std::vector<double> scores;  // path likelihoods, the best scaled to 1
};

struct SclStats {
  long long ops = 0;          // likelihood entries computed + candidates ranked
  long long prunes = 0;       // selection points that discarded a path
  bool monotone = true;       // every kept path scored >= every dropped one
};

// Frozen value of coordinate 0/1, or -1 when free.
struct PairFrozen {
  int u = -1;
  int v = -1;
};

ListResult scl_base2(const ListState& state, PairFrozen frozen, int list_size,
                     SclStats* stats = nullptr);
ListResult decode_scl_arikan(const CodeSpec& spec, const ListState& state, int list_size,
                             SclStats* stats = nullptr);
ListResult decode_scl_general(const CodeSpec& spec, const ListState& state, int list_size,
                              SclStats* stats = nullptr);
ListResult decode_scl(const CodeSpec& spec, const ListState& state, int list_size,
                      SclStats* stats = nullptr);

// Best-scoring row (near-ties to the lexicographically smallest u). With a
// checker: the best row that passes, else the best row overall.
std::pair<SymbolVec, SymbolVec> select_final(const ListResult& result,
                                             const std::optional<CrcChecker>& crc = std::nullopt,
                                             const CodeSpec* spec = nullptr);

}  // namespace polar

#endif  // POLAR_SCL_HPP_
