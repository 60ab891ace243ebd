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

#include <random>

#include "doctest.h"
#include "polar/code_spec.hpp"
#include "polar/error.hpp"
#include "polar/kernel.hpp"
#include "polar/spec_io.hpp"

using namespace polar;

TEST_CASE("gf tables satisfy field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 27, 256}) {
    auto f = Alphabet::make(q);
    CHECK(f->q() == q);
    int order_of_prim = 1;
    for (Symbol c = f->primitive(); c != 1; c = f->mul(c, f->primitive())) ++order_of_prim;
    CHECK(order_of_prim == q - 1);
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->mul(a, 1) == a);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      // Characteristic two: every element is its own negative.
      if (f->p() == 2) CHECK(f->neg(a) == a);
    }
  }
  auto f8 = Alphabet::make(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        CHECK(f8->mul(a, f8->add(b, c)) == f8->add(f8->mul(a, b), f8->mul(a, c)));
  CHECK_THROWS_AS(Alphabet::make(6), DomainError);
  CHECK_THROWS_AS(Alphabet::make(1), DomainError);
  CHECK_THROWS_AS(Alphabet::make(5)->inv(0), DomainError);
}

TEST_CASE("arikan kernel map") {
  auto k = Kernel::arikan();
  CHECK(k->ell() == 2);
  CHECK(k->q() == 2);
  CHECK(k->apply(SymbolVec{0, 0}) == SymbolVec{0, 0});
  CHECK(k->apply(SymbolVec{1, 1}) == SymbolVec{0, 1});
  CHECK(k->apply(SymbolVec{1, 0}) == SymbolVec{1, 0});
  CHECK(k->verify_bijective());
  CHECK(k->generator() == Matrix{{1, 0}, {1, 1}});
  CHECK(k->homogeneous());
}

TEST_CASE("linear kernels") {
  auto f2 = Alphabet::make(2);
  auto id = Kernel::linear({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f2);
  for (int i = 0; i < 16; ++i) CHECK(id->apply_index(i) == i);
  CHECK(Kernel::triangular4()->verify_bijective());
  CHECK_THROWS_AS(Kernel::linear({{1, 1}, {1, 1}}, f2), InvalidKernelError);
  auto glued = Kernel::linear(Kernel::triangular4()->generator(), f2, {{0, 1}, {1, 2}, {3, 1}});
  CHECK(glued->glue().size() == 3);
  CHECK(glued->group_starting_at(1) == 1);
  CHECK(glued->group_starting_at(2) == -1);
  CHECK_THROWS_AS(Kernel::linear(Kernel::triangular4()->generator(), f2, {{0, 1}, {2, 2}}),
                  InvalidKernelError);
  CHECK_THROWS_AS(Kernel::linear(Kernel::triangular4()->generator(), f2, {{0, 2}, {2, 1}}),
                  InvalidKernelError);
}

TEST_CASE("built-in kernels are bijective") {
  for (auto k : {Kernel::arikan(), Kernel::triangular4(), Kernel::reed_solomon(3),
                 Kernel::reed_solomon(4), Kernel::reed_solomon(5), Kernel::reed_solomon(8)}) {
    if (k->domain_size() <= 4096 || k->domain_size() <= (1 << 20)) CHECK(k->verify_bijective());
  }
}

TEST_CASE("non-linear map kernels") {
  auto f2 = Alphabet::make(2);
  // (u, v) -> (u + v + uv, v) is a bijection over GF(2)^2? (0,0)->(0,0),
  // (1,0)->(1,0), (0,1)->(1,1), (1,1)->(1,1): no.
  std::vector<int> bad{0, 1, 3, 3};
  CHECK_THROWS_AS(Kernel::from_map(2, f2, bad), InvalidKernelError);
  std::vector<int> swap{0, 2, 1, 3};
  auto k = Kernel::from_map(2, f2, swap);
  CHECK(!k->is_linear());
  CHECK(k->apply(SymbolVec{1, 0}) == SymbolVec{0, 1});
  CHECK_THROWS_AS(k->generator(), UnsupportedError);
}

TEST_CASE("encode examples") {
  CodeSpec s1(Kernel::arikan(), 1);
  CHECK(encode(s1, {1, 0}) == SymbolVec{1, 0});
  CodeSpec s2(Kernel::arikan(), 2);
  CHECK(encode(s2, {0, 0, 0, 0}) == SymbolVec{0, 0, 0, 0});
  CHECK(encode(s2, {1, 0, 0, 0}) == SymbolVec{1, 0, 0, 0});
  for (int w = 0; w < 16; ++w) {
    SymbolVec u{w & 1, (w >> 1) & 1, (w >> 2) & 1, (w >> 3) & 1};
    SymbolVec want{u[0] ^ u[1] ^ u[2] ^ u[3], u[2] ^ u[3], u[1] ^ u[3], u[3]};
    CHECK(encode(s2, u) == want);
  }
  CHECK_THROWS_AS(encode(s2, {0, 0, 0}), ShapeError);
  CHECK_THROWS_AS(encode(s2, {0, 2, 0, 0}), DomainError);
  s2.freeze(0, 1);
  CHECK_THROWS_AS(encode(s2, {0, 0, 0, 0}), ContractError);
  CHECK(encode(s2, {1, 0, 0, 0}) == SymbolVec{1, 0, 0, 0});
}

TEST_CASE("encode matrix") {
  CodeSpec s1(Kernel::arikan(), 1);
  CHECK(encode_matrix(s1) == Matrix{{1, 0}, {1, 1}});
  CodeSpec t1(Kernel::triangular4(), 1);
  CHECK(encode_matrix(t1) == Kernel::triangular4()->generator());
  CodeSpec s2(Kernel::arikan(), 2);
  Matrix m = encode_matrix(s2);
  for (int w = 0; w < 16; ++w) {
    SymbolVec u{w & 1, (w >> 1) & 1, (w >> 2) & 1, (w >> 3) & 1};
    CHECK(vec_mat_mul(u, m, *Alphabet::make(2)) == encode(s2, u));
  }
  auto swap = Kernel::from_map(2, Alphabet::make(2), {0, 2, 1, 3});
  CHECK_THROWS_AS(encode_matrix(CodeSpec(swap, 2)), UnsupportedError);
}

TEST_CASE("encode agrees with encode matrix for linear kernels") {
  std::mt19937_64 rng(7);
  for (auto k : {Kernel::arikan(), Kernel::triangular4(), Kernel::reed_solomon(3),
                 Kernel::reed_solomon(4)}) {
    for (int m = 1; m <= 4; ++m) {
      CodeSpec s(k, m);
      if (s.n_total() > 256) continue;
      Matrix mat = encode_matrix(s);
      std::uniform_int_distribution<int> sym(0, k->q() - 1);
      for (int t = 0; t < 100; ++t) {
        SymbolVec u(s.n_total());
        for (auto& x : u) x = sym(rng);
        CHECK(vec_mat_mul(u, mat, k->alphabet()) == encode(s, u));
      }
    }
  }
}

TEST_CASE("encode composes outer codes columnwise") {
  std::mt19937_64 rng(3);
  for (auto k : {Kernel::arikan(), Kernel::triangular4(), Kernel::reed_solomon(3)}) {
    CodeSpec s(k, 3);
    CodeSpec inner(k, 2);
    const int n = s.n_total(), len = n / k->ell();
    std::uniform_int_distribution<int> sym(0, k->q() - 1);
    SymbolVec u(n);
    for (auto& x : u) x = sym(rng);
    SymbolVec x = encode(s, u);
    std::vector<SymbolVec> gamma;
    for (int r = 0; r < k->ell(); ++r)
      gamma.push_back(encode(inner, SymbolVec(u.begin() + r * len, u.begin() + (r + 1) * len)));
    for (int j = 0; j < len; ++j) {
      SymbolVec col;
      for (int r = 0; r < k->ell(); ++r) col.push_back(gamma[r][j]);
      SymbolVec out = k->apply(col);
      for (int i = 0; i < k->ell(); ++i) CHECK(x[j * k->ell() + i] == out[i]);
    }
  }
}

TEST_CASE("code spec bookkeeping") {
  CodeSpec s(Kernel::arikan(), 3);
  CHECK(s.n_total() == 8);
  CHECK(s.rate() == 1.0);
  s.freeze(0);
  s.freeze(5, 1);
  CHECK(s.num_frozen() == 2);
  CHECK(s.rate() == doctest::Approx(0.75));
  CHECK(s.frozen_value(5) == 1);
  CHECK(s.outer(1).is_frozen(1));
  CHECK(s.outer(1).frozen_value(1) == 1);
  CHECK_THROWS_AS(s.freeze(8), ShapeError);
  SymbolVec info{1, 1, 0, 1, 0, 1};
  SymbolVec u = s.expand(info);
  CHECK(u[0] == 0);
  CHECK(u[5] == 1);
  CHECK(s.extract(u) == info);
}

TEST_CASE("spec text round trip") {
  CodeSpec s(Kernel::triangular4(), 2);
  s.freeze(0);
  s.freeze(3, 1);
  CodeSpec back = spec_from_text(spec_to_text(s));
  CHECK(back.n_total() == 16);
  CHECK(back.kernel().generator() == s.kernel().generator());
  CHECK(back.frozen_indices() == s.frozen_indices());
  CHECK(back.frozen_value(3) == 1);

  auto f2 = Alphabet::make(2);
  auto g = Kernel::linear(Kernel::triangular4()->generator(), f2, {{0, 1}, {1, 2}, {3, 1}});
  CodeSpec gs(g, 1);
  CodeSpec gb = spec_from_text(spec_to_text(gs));
  CHECK(gb.kernel().glue() == g->glue());

  auto nl = Kernel::from_map(2, f2, {0, 2, 1, 3});
  CodeSpec ns(nl, 2);
  CHECK(!spec_from_text(spec_to_text(ns)).kernel().is_linear());

  const char* text =
      "# a comment\n"
      "kernel ell=2 q=2\n"
      "G\n1 0\n1 1\n"
      "m 3\n"
      "frozen 0 1 2 4:1\n";
  CodeSpec p = spec_from_text(text);
  CHECK(p.num_frozen() == 4);
  CHECK(p.frozen_value(4) == 1);
  CHECK_THROWS_AS(spec_from_text("kernel ell=2 q=2\nm 2\n"), ParseError);
  CHECK_THROWS_AS(spec_from_text("bogus\n"), ParseError);
  CHECK_THROWS_AS(spec_from_text("kernel ell=2 q=2\nG\n1 1\n1 1\nm 1\n"), InvalidKernelError);
}
