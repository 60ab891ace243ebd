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

#include "polar/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "polar/error.hpp"
#include "polar/sc.hpp"

namespace polar {

std::vector<double> bec_erasure_probabilities(int m, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ParameterError("erasure probability must be in [0,1]");
  std::vector<double> out(static_cast<size_t>(1) << m);
  struct Rec {
    static void run(double zz, int lvl, double* dst) {
      if (lvl == 0) {
        dst[0] = zz;
        return;
      }
      const size_t half = static_cast<size_t>(1) << (lvl - 1);
      run(2 * zz - zz * zz, lvl - 1, dst);
      run(zz * zz, lvl - 1, dst + half);
    }
  };
  Rec::run(eps, m, out.data());
  return out;
}

int frozen_count(int n, double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw ParameterError("rate must be in [0,1]");
  int f = static_cast<int>(std::ceil(n * (1.0 - rate) - 1e-9));
  return std::clamp(f, 0, n);
}

CodeSpec freeze_worst(const CodeSpec& base, const std::vector<double>& badness, double rate) {
  const int n = base.n_total();
  if (static_cast<int>(badness.size()) != n) throw ShapeError("badness vector has wrong length");
  int f = frozen_count(n, rate);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return badness[a] > badness[b]; });
  CodeSpec spec = base;
  spec.clear_frozen();
  for (int i = 0; i < f; ++i) spec.freeze(order[i], 0);
  return spec;
}

CodeSpec construct_bec(const CodeSpec& base, double eps, double rate) {
  if (!is_arikan(base.kernel())) throw UnsupportedError("BEC construction needs the Arikan kernel");
  return freeze_worst(base, bec_erasure_probabilities(base.m(), eps), rate);
}

std::vector<long long> genie_error_counts(const CodeSpec& base, const ChannelModel& ch,
                                          long long trials, std::uint64_t seed, int jobs) {
  if (trials <= 0) throw ParameterError("trials must be positive");
  const CodeSpec& open = base;
  const int n = open.n_total();
  const int q = open.q();
  jobs = std::max(1, jobs);
  std::vector<std::vector<long long>> partial(jobs, std::vector<long long>(n, 0));
  auto work = [&](int lane) {
    SymbolVec u(n);
    for (long long t = lane; t < trials; t += jobs) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      std::uniform_int_distribution<int> sym(0, q - 1);
      for (int i = 0; i < n; ++i) u[i] = sym(rng);
      for (int i = 0; i < n; ++i)
        if (open.is_frozen(i)) u[i] = open.frozen_value(i);
      SymbolVec x = encode(open, u);
      auto llrs = transmit(ch, x, rng);
      ScOptions opt;
      opt.genie = &u;
      ScResult r = decode_sc(open, to_llr_functions(llrs), opt);
      for (int i = 0; i < n; ++i)
        if (!open.is_frozen(i) && r.raw_decisions[i] != u[i]) ++partial[lane][i];
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  std::vector<long long> counts(n, 0);
  for (const auto& p : partial)
    for (int i = 0; i < n; ++i) counts[i] += p[i];
  return counts;
}

CodeSpec construct_montecarlo(const CodeSpec& base, const ChannelModel& ch, double rate,
                              long long trials, std::uint64_t seed, int jobs) {
  if (trials <= 0) throw ParameterError("trials must be positive");
  CodeSpec open = base;
  open.clear_frozen();
  auto counts = genie_error_counts(open, ch, trials, seed, jobs);
  std::vector<double> bad(counts.begin(), counts.end());
  return freeze_worst(base, bad, rate);
}

}  // namespace polar
