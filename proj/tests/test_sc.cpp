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

#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "polar/channel.hpp"
#include "polar/code_spec.hpp"
#include "polar/construction.hpp"
#include "polar/error.hpp"
#include "polar/llr.hpp"
#include "polar/oracle.hpp"
#include "polar/sc.hpp"

using namespace polar;

namespace {

CodeSpec random_frozen(KernelPtr k, int m, Rng& rng, double p = 0.4) {
  CodeSpec s(k, m);
  std::bernoulli_distribution fr(p);
  for (int i = 0; i < s.n_total(); ++i)
    if (fr(rng)) s.freeze(i);
  return s;
}

SymbolVec random_u(const CodeSpec& s, Rng& rng) {
  std::uniform_int_distribution<int> sym(0, s.q() - 1);
  SymbolVec u(s.n_total());
  for (int i = 0; i < s.n_total(); ++i) u[i] = s.is_frozen(i) ? s.frozen_value(i) : sym(rng);
  return u;
}

// Noisy q-ary evidence: the true symbol gets a random advantage.
std::vector<LlrFunction> noisy_qary(const SymbolVec& x, int q, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.5);
  std::vector<LlrFunction> out;
  for (Symbol s : x) {
    std::vector<double> nl(q);
    for (int t = 0; t < q; ++t) nl[t] = nd(rng) + (t == s ? 2.0 : 0.0);
    std::vector<double> v(q);
    for (int t = 0; t < q; ++t) v[t] = nl[0] - nl[t];
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("f_plus") {
  CHECK(f_plus(kInf, 3.0) == 3.0);
  CHECK(f_plus(-kInf, 3.0) == -3.0);
  CHECK(f_plus(kInf, -kInf) == -kInf);
  CHECK(f_plus(0.0, 5.0) == 0.0);
  CHECK(f_plus(0.0, -kInf) == 0.0);
  CHECK(f_plus(2.0, 2.0) == doctest::Approx(1.3250).epsilon(1e-4));
  CHECK(f_plus(2.0, 2.0) == doctest::Approx(2 * std::atanh(std::tanh(1.0) * std::tanh(1.0))));
  CHECK(f_plus(-1.5, 0.7) == doctest::Approx(2 * std::atanh(std::tanh(-0.75) * std::tanh(0.35))));
  CHECK(f_plus(-1.5, 0.7, FPlusMode::kMinSum) == -0.7);
  CHECK(f_plus(60.0, 80.0) == doctest::Approx(60.0));
}

TEST_CASE("f_equal") {
  CHECK(f_equal(1.5, -0.5) == 1.0);
  CHECK(f_equal(kInf, -7) == kInf);
  CHECK(f_equal(-kInf, 7) == -kInf);
  CHECK(f_equal(0, 0) == 0);
  CHECK_THROWS_AS(f_equal(kInf, -kInf), ContradictionError);
  bool bad = false;
  CHECK(f_equal_checked(kInf, kInf, &bad) == kInf);
  CHECK(!bad);
  f_equal_checked(-kInf, kInf, &bad);
  CHECK(bad);
}

TEST_CASE("decide ties to zero") {
  CHECK(decide_binary(0.0) == 0);
  CHECK(decide_binary(-0.0) == 0);
  CHECK(decide_binary(-1e-3) == 1);
  CHECK(pick_min_llr(std::vector<double>{0.0, 0.0, 1.0}.data(), 3, {1, 1, 1}) == 0);
  CHECK(pick_min_llr(std::vector<double>{0.0, -1.0, -1.0}.data(), 3, {1, 1, 1}) == 1);
  CHECK(pick_min_llr(std::vector<double>{0.0, -1.0, -2.0}.data(), 3, {1, 1, 0}) == 1);
  CHECK_THROWS_AS(pick_min_llr(std::vector<double>{0.0, 1.0}.data(), 2, {0, 0}), ContractError);
}

TEST_CASE("arikan sc examples") {
  CodeSpec s(Kernel::arikan(), 1);
  s.freeze(0);
  s.freeze(1);
  auto r = decode_sc_arikan(s, {-3.0, -4.0});
  CHECK(r.u_hat == SymbolVec{0, 0});
  CHECK(r.x_hat == SymbolVec{0, 0});

  CodeSpec open(Kernel::arikan(), 1);
  CHECK(decode_sc_arikan(open, {kInf, kInf}).u_hat == SymbolVec{0, 0});

  CodeSpec s4(Kernel::arikan(), 2);
  s4.freeze(0);
  s4.freeze(1);
  auto r4 = decode_sc_arikan(s4, {kInf, 0.0, kInf, kInf});
  CHECK(r4.u_hat == SymbolVec{0, 0, 0, 0});
  CHECK(r4.x_hat == SymbolVec{0, 0, 0, 0});
  CHECK(!r4.contradiction);
  CHECK_THROWS_AS(decode_sc_arikan(s4, {0.0, 0.0}), ShapeError);
  CHECK_THROWS_AS(decode_sc_arikan(CodeSpec(Kernel::triangular4(), 1), {0, 0, 0, 0}),
                  UnsupportedError);
}

TEST_CASE("kernel marginal llr matches brute force") {
  Rng rng(99);
  std::normal_distribution<double> nd(0.0, 3.0);
  auto ar = Kernel::arikan();
  for (int t = 0; t < 200; ++t) {
    double a = nd(rng), b = nd(rng);
    std::vector<LlrFunction> lam{LlrFunction::binary(a), LlrFunction::binary(b)};
    CHECK(std::abs(kernel_marginal_llr(ar, lam, {})[1] - f_plus(a, b)) < 1e-9);
    for (int u0 = 0; u0 < 2; ++u0)
      CHECK(std::abs(kernel_marginal_llr(ar, lam, {u0})[1] - ((u0 ? -a : a) + b)) < 1e-9);
  }
  auto glued = Kernel::linear(Kernel::triangular4()->generator(), Alphabet::make(2),
                              {{0, 1}, {1, 2}, {3, 1}});
  for (auto k : {Kernel::triangular4(), Kernel::reed_solomon(3), Kernel::reed_solomon(4),
                 Kernel::reed_solomon(5), glued}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<LlrFunction> lam;
      for (int i = 0; i < k->ell(); ++i) {
        std::vector<double> v(k->q());
        for (int s = 1; s < k->q(); ++s) v[s] = nd(rng);
        lam.emplace_back(v);
      }
      std::uniform_int_distribution<int> sym(0, k->q() - 1);
      for (const auto& g : k->glue()) {
        SymbolVec dec(g.start);
        for (auto& d : dec) d = sym(rng);
        auto fast = kernel_marginal_llr(k, lam, dec);
        auto slow = marginal_llr_bruteforce(k, lam, dec);
        REQUIRE(fast.q() == slow.q());
        for (int s = 0; s < fast.q(); ++s) CHECK(std::abs(fast[s] - slow[s]) < 1e-9);
      }
    }
    std::vector<LlrFunction> flat(k->ell(), LlrFunction::uniform(k->q()));
    auto z = kernel_marginal_llr(k, flat, {});
    for (int s = 0; s < z.q(); ++s) CHECK(std::abs(z[s]) < 1e-12);
  }
  std::vector<LlrFunction> lam4(4, LlrFunction::binary(0.3));
  CHECK_THROWS_AS(kernel_marginal_llr(glued, lam4, {0, 1}), ContractError);
}

TEST_CASE("general sc with arikan kernel equals specialized sc") {
  Rng rng(2024);
  auto ar = Kernel::arikan();
  for (int trial = 0; trial < 500; ++trial) {
    int m = 1 + trial % 6;
    CodeSpec s = random_frozen(ar, m, rng);
    SymbolVec u = random_u(s, rng);
    auto l = transmit(ChannelModel::bsc(0.1), encode(s, u), rng);
    ScOptions opt;
    opt.trace = true;
    auto a = decode_sc_arikan(s, l, opt);
    auto g = decode_sc_general(s, l, opt);
    REQUIRE(a.u_hat == g.u_hat);
    CHECK(a.x_hat == g.x_hat);
    std::map<int, double> ga;
    for (auto& e : g.trace) ga[e.index] = e.llr[1];
    for (auto& e : a.trace) {
      REQUIRE(ga.count(e.index));
      double d = ga[e.index], w = e.llr[1];
      if (std::isinf(w)) CHECK(d == w);
      else CHECK(std::abs(d - w) < 1e-9);
    }
  }
}

TEST_CASE("all-frozen code returns frozen values") {
  for (auto k : {Kernel::arikan(), Kernel::triangular4(), Kernel::reed_solomon(3)}) {
    CodeSpec s(k, 2);
    for (int i = 0; i < s.n_total(); ++i) s.freeze(i, i % k->q());
    Rng rng(1);
    auto l = noisy_qary(SymbolVec(s.n_total(), 1), k->q(), rng);
    auto r = decode_sc(s, l);
    for (int i = 0; i < s.n_total(); ++i) CHECK(r.u_hat[i] == i % k->q());
    CHECK(r.x_hat == encode(s, r.u_hat));
  }
}

TEST_CASE("l=4 kernel with one info bit is MAP") {
  CodeSpec s(Kernel::triangular4(), 1);
  s.freeze(0);
  s.freeze(1);
  s.freeze(2);
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    std::normal_distribution<double> nd(0.0, 2.0);
    std::vector<double> l(4);
    for (auto& v : l) v = nd(rng);
    auto r = decode_sc(s, to_llr_functions(l));
    CHECK(r.u_hat == ml_decode(s, l).u);
  }
}

TEST_CASE("re-encoding closure, frozen respect and noiseless recovery") {
  Rng rng(31);
  auto glued = Kernel::linear(Kernel::triangular4()->generator(), Alphabet::make(2),
                              {{0, 1}, {1, 2}, {3, 1}});
  auto nonlin = Kernel::from_map(2, Alphabet::make(3), {0, 4, 8, 3, 7, 2, 6, 1, 5});
  struct Case { KernelPtr k; int m; };
  for (auto c : {Case{Kernel::arikan(), 5}, Case{Kernel::triangular4(), 3},
                 Case{Kernel::reed_solomon(3), 2}, Case{Kernel::reed_solomon(4), 2},
                 Case{glued, 2}, Case{nonlin, 3}}) {
    REQUIRE(c.k->verify_bijective());
    for (int trial = 0; trial < 20; ++trial) {
      CodeSpec s = random_frozen(c.k, c.m, rng);
      for (int i : s.frozen_indices()) s.freeze(i, rng() % c.k->q());
      SymbolVec u = random_u(s, rng);
      SymbolVec x = encode(s, u);
      auto r = decode_sc(s, noisy_qary(x, c.k->q(), rng));
      CHECK(r.x_hat == encode(s, r.u_hat));
      for (int i : s.frozen_indices()) CHECK(r.u_hat[i] == s.frozen_value(i));
      std::vector<LlrFunction> sure;
      for (Symbol sy : x) {
        std::vector<double> v(c.k->q(), kInf);
        v[0] = 0;
        if (sy != 0) {
          for (auto& e : v) e = kInf;
          v[0] = 0;
          v[sy] = -kInf;
        }
        sure.emplace_back(v);
      }
      auto n = decode_sc(s, sure);
      CHECK(n.u_hat == u);
      CHECK(!n.contradiction);
    }
  }
}

TEST_CASE("sc fer is monotone in erasure rate") {
  CodeSpec base(Kernel::arikan(), 5);
  CodeSpec s = construct_bec(base, 0.4, 0.5);
  auto fer = [&](double eps) {
    long long errs = 0;
    Rng rng(77);
    for (int t = 0; t < 10000; ++t) {
      SymbolVec u = random_u(s, rng);
      auto l = transmit(ChannelModel::bec(eps), encode(s, u), rng);
      if (decode_sc_arikan(s, l).u_hat != u) ++errs;
    }
    return errs / 1e4;
  };
  double a = fer(0.3), b = fer(0.5);
  double band = 3 * std::sqrt((a * (1 - a) + b * (1 - b)) / 1e4);
  CHECK(a <= b + band);
}
