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
#include <set>
#include <sstream>

#include "doctest.h"
#include "polar/bp.hpp"
#include "polar/channel.hpp"
#include "polar/construction.hpp"
#include "polar/error.hpp"
#include "polar/hwsim.hpp"
#include "polar/sc.hpp"

using namespace polar;
using namespace polar::hwsim;

namespace {

ArchConfig cfg(Arch a, int n, int latency = 1) {
  ArchConfig c;
  c.arch = a;
  c.n = n;
  c.pe_latency = latency;
  return c;
}

int log2i(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b;
}

CodeSpec arikan_code(int n, double rate) {
  return construct_bec(CodeSpec(Kernel::arikan(), log2i(n)), 0.5, rate);
}

SymbolVec random_u(const CodeSpec& s, Rng& rng) {
  std::uniform_int_distribution<int> sym(0, s.q() - 1);
  SymbolVec u(s.n_total());
  for (int i = 0; i < s.n_total(); ++i) u[i] = s.is_frozen(i) ? s.frozen_value(i) : sym(rng);
  return u;
}

// Mix of channels, including erasures and certain evidence.
std::vector<double> evidence(const CodeSpec& s, Rng& rng, int trial) {
  SymbolVec x = encode(s, random_u(s, rng));
  switch (trial % 4) {
    case 0: return transmit(ChannelModel::bsc(0.08), x, rng);
    case 1: return transmit(ChannelModel::bec(0.4), x, rng);
    case 2: return transmit(ChannelModel::biawgn(0.9), x, rng);
    default: {
      std::vector<double> l = transmit(ChannelModel::bec(0.3), x, rng);
      std::bernoulli_distribution flip(0.05);
      for (double& v : l)
        if (flip(rng)) v = -v;
      return l;
    }
  }
}

bool busy_ok(const CycleReport& r) {
  for (int v : r.pe_busy_histogram)
    if (v > r.pe_count) return false;
  return true;
}

}  // namespace

TEST_CASE("structural audits") {
  Structure p = SimDecoder(cfg(Arch::kScPipeline, 8)).audit();
  CHECK(p.pe_count == 7);
  CHECK(p.llr_registers == 14);
  CHECK(p.longest_mux_path == 0);
  Structure l = SimDecoder(cfg(Arch::kScLine, 8)).audit();
  CHECK(l.pe_count == 4);
  CHECK(l.llr_registers == 7);
  CHECK(l.mux_count == 6);
  CHECK(l.longest_mux_path == 2);
  ArchConfig g = cfg(Arch::kGeneralLine, 16);
  g.ell = 4;
  CHECK(SimDecoder(g).audit().pe_count == 4);
  CHECK(SimDecoder(cfg(Arch::kBpLine, 8)).audit().mu_v_cells == 12);
  for (int n = 2; n <= 1024; n *= 2) {
    Structure s = SimDecoder(cfg(Arch::kScLine, n)).audit();
    CHECK(s.pe_count == formulas::line_pes(n));
    CHECK(s.llr_registers == formulas::line_registers(n));
    CHECK(s.mux_count == formulas::line_muxes(n));
    Structure t = SimDecoder(cfg(Arch::kScPipeline, n)).audit();
    CHECK(t.pe_count == formulas::pipeline_pes(n));
    CHECK(t.llr_registers == formulas::pipeline_registers(n));
    CHECK(SimDecoder(cfg(Arch::kBpLine, n)).audit().mu_v_cells == formulas::bp_line_mu_v_cells(n));
  }
}

TEST_CASE("cycle counts") {
  Rng rng(3);
  CodeSpec s8 = arikan_code(8, 0.5);
  auto l8 = evidence(s8, rng, 0);
  ScRun r = SimDecoder(cfg(Arch::kScPipeline, 8)).run_sc(s8, l8);
  CHECK(r.report.cycles == 14);
  CHECK(r.report.to_text().find("cycles=14\n") != std::string::npos);
  CHECK(SimDecoder(cfg(Arch::kScLine, 8)).run_sc(s8, l8).report.cycles == 14);
  CHECK(SimDecoder(cfg(Arch::kScLine, 8, 3)).run_sc(s8, l8).report.cycles == 42);

  for (int n : {32, 64, 128}) {
    ArchConfig c = cfg(Arch::kScLineLimited, n);
    c.limit = 4;
    CodeSpec s = arikan_code(n, 0.5);
    ScRun run = SimDecoder(c).run_sc(s, evidence(s, rng, 1));
    CHECK(run.report.cycles - (2 * n - 2) == 34);
    if (n == 64) CHECK(run.report.cycles == 160);
    CHECK(run.report.pe_count == n / 16);
  }

  BpRun b = SimDecoder(cfg(Arch::kBpLine, 4)).run_bp_line(arikan_code(4, 0.5), {1, 2, -1, 3}, 2);
  CHECK(b.report.extensions.at("per_iteration_cycles") == 15);
  CHECK(b.report.cycles == 30);

  ArchConfig g = cfg(Arch::kGeneralLine, 16);
  g.ell = 4;
  CodeSpec s16(Kernel::triangular4(), 2);
  std::vector<LlrFunction> ev;
  for (double v : evidence(s16, rng, 2)) ev.push_back(LlrFunction::binary(v));
  CHECK(SimDecoder(g).run_general_line(s16, ev).report.cycles == 20);
}

TEST_CASE("general line timing follows the stage recursion") {
  // Closed form c(N + l(log_l N - 1)) agrees with the schedule only for N <= l^2.
  CHECK(formulas::general_line_cycles(8, 2, 1) == 12);
  CHECK(formulas::general_line_recursion(8, 2, 1) == 14);
  Rng rng(4);
  for (int ell : {2, 4}) {
    for (int n = ell; n <= 256; n *= ell) {
      for (int c : {1, 2}) {
        ArchConfig a = cfg(Arch::kGeneralLine, n, c);
        a.ell = ell;
        KernelPtr k = ell == 2 ? Kernel::arikan() : Kernel::triangular4();
        int m = 0;
        for (int t = n; t > 1; t /= ell) ++m;
        CodeSpec s(k, m);
        std::vector<LlrFunction> ev;
        for (double v : evidence(s, rng, 0)) ev.push_back(LlrFunction::binary(v));
        ScRun run = SimDecoder(a).run_general_line(s, ev);
        CHECK(run.report.cycles == formulas::general_line_recursion(n, ell, c));
        CHECK(run.report.pe_count == formulas::general_line_pes(n, ell));
        CHECK(run.report.llr_registers == formulas::general_line_registers(n, ell));
        if (n <= ell * ell) CHECK(run.report.cycles == formulas::general_line_cycles(n, ell, c));
      }
    }
  }
}

TEST_CASE("multi-codeword staggering and sharing") {
  Rng rng(5);
  for (int n : {4, 16, 32}) {
    for (int p : {1, n / 2, n - 1}) {
      ArchConfig c = cfg(Arch::kScLineMulti, n);
      c.codewords = p;
      SimDecoder sim(c);
      std::vector<CodeSpec> specs;
      std::vector<std::vector<double>> llrs;
      for (int d = 0; d < p; ++d) {
        specs.push_back(arikan_code(n, d % 2 ? 0.25 : 0.5));
        llrs.push_back(evidence(specs.back(), rng, d));
      }
      MultiRun run = sim.run_sc_multi(specs, llrs);
      CHECK(run.report.cycles == formulas::multi_cycles(n, p));
      if (p == 1) CHECK(run.report.cycles == 2 * n - 2);
      if (p == n - 1) CHECK(run.report.cycles == 3 * n - 4);
      CHECK(run.report.pe_count == formulas::multi_pes(n, p));
      CHECK(run.report.extensions.at("contention") == 0);
      CHECK(run.report.extensions.at("hazards") == 0);
      CHECK(run.report.extensions.at("partial_encoding_ok") == 1);
      CHECK(busy_ok(run.report));
      for (int d = 0; d < p; ++d) {
        ScResult sw = decode_sc_arikan(specs[d], llrs[d]);
        CHECK(run.results[d].u_hat == sw.u_hat);
        CHECK(run.results[d].x_hat == sw.x_hat);
      }
    }
  }
  ArchConfig c = cfg(Arch::kScLineMulti, 16);
  c.codewords = 15;
  CHECK(SimDecoder(c).run_sc_multi(std::vector<CodeSpec>(15, arikan_code(16, 0.5)),
                                   std::vector<std::vector<double>>(15, std::vector<double>(16, 1.0)))
            .report.cycles == 44);
}

TEST_CASE("SC architectures match the software decoder") {
  Rng rng(6);
  for (int n : {2, 8, 32, 64}) {
    std::vector<ArchConfig> archs = {cfg(Arch::kScPipeline, n), cfg(Arch::kScLine, n),
                                     cfg(Arch::kScLine, n, 2)};
    for (int i = 2; i <= log2i(n); ++i) {
      ArchConfig c = cfg(Arch::kScLineLimited, n);
      c.limit = i;
      archs.push_back(c);
    }
    for (const ArchConfig& a : archs) {
      SimDecoder sim(a);
      for (int t = 0; t < 30; ++t) {
        CodeSpec s = arikan_code(n, t % 3 == 0 ? 0.0 : 0.5);
        auto l = evidence(s, rng, t);
        ScRun run = sim.run_sc(s, l);
        ScResult sw = decode_sc_arikan(s, l);
        REQUIRE(run.result.u_hat == sw.u_hat);
        CHECK(run.result.x_hat == sw.x_hat);
        CHECK(run.result.contradiction == sw.contradiction);
        CHECK(run.report.extensions.at("hazards") == 0);
        CHECK(run.report.extensions.at("partial_encoding_ok") == 1);
        CHECK(busy_ok(run.report));
      }
    }
  }
}

TEST_CASE("BP line matches the software decoder") {
  Rng rng(7);
  for (int n : {2, 8, 32}) {
    SimDecoder sim(cfg(Arch::kBpLine, n));
    for (int t = 0; t < 20; ++t) {
      CodeSpec s = arikan_code(n, 0.5);
      auto l = n == 32 && t % 2 ? transmit(ChannelModel::bsc(0.05), encode(s, random_u(s, rng)), rng)
                                : evidence(s, rng, t);
      for (int iters : {1, 3}) {
        BpRun run = sim.run_bp_line(s, l, iters);
        BpResult sw = bp_decode(s, l, iters, StopRule::kNone);
        REQUIRE(run.u_hat == sw.u_hat);
        CHECK(run.report.extensions.at("iterations") == sw.iterations);
        CHECK(run.report.extensions.at("per_iteration_cycles") == formulas::bp_line_iteration_cycles(n));
        CHECK(run.report.pe_count == formulas::bp_line_pes(n));
        CHECK(run.report.extensions.at("hazards") == 0);
        CHECK(busy_ok(run.report));
      }
    }
  }
}

TEST_CASE("general line matches the software decoder") {
  Rng rng(8);
  struct Case {
    KernelPtr k;
    int m;
  };
  std::vector<Case> cases = {{Kernel::arikan(), 3},        {Kernel::triangular4(), 3},
                             {Kernel::reed_solomon(3), 2}, {Kernel::reed_solomon(4), 2},
                             {Kernel::triangular4(), 1}};
  std::normal_distribution<double> g(0.0, 2.0);
  for (const Case& cs : cases) {
    CodeSpec base(cs.k, cs.m);
    ArchConfig a = cfg(Arch::kGeneralLine, base.n_total(), 2);
    a.ell = base.ell();
    SimDecoder sim(a);
    for (int t = 0; t < 30; ++t) {
      CodeSpec s = base;
      std::bernoulli_distribution fr(t % 5 == 0 ? 1.0 : 0.4);
      for (int i = 0; i < s.n_total(); ++i)
        if (fr(rng)) s.freeze(i, 0);
      SymbolVec x = encode(s, random_u(s, rng));
      std::vector<LlrFunction> ev;
      for (int i = 0; i < s.n_total(); ++i) {
        std::vector<double> v(s.q());
        for (int sym = 1; sym < s.q(); ++sym) v[sym] = g(rng) + (sym == x[i] ? -1.0 : 1.5);
        if (x[i] != 0) v[x[i]] = std::min(v[x[i]], -0.1);
        ev.emplace_back(v);
      }
      ScRun run = sim.run_general_line(s, ev);
      ScResult sw = decode_sc_general(s, ev);
      REQUIRE(run.result.u_hat == sw.u_hat);
      CHECK(run.result.x_hat == sw.x_hat);
      CHECK(run.result.contradiction == sw.contradiction);
      CHECK(run.report.extensions.at("partial_encoding_ok") == 1);
      CHECK(run.report.extensions.at("hazards") == 0);
    }
  }
}

TEST_CASE("P-Mode is a pure function of its inputs") {
  Rng rng(9);
  std::normal_distribution<double> g(0.0, 3.0);
  for (Arch a : {Arch::kScLine, Arch::kScLineLimited, Arch::kScLineMulti}) {
    ArchConfig c = cfg(a, 32);
    c.limit = 3;
    c.codewords = 4;
    SimDecoder sim(c);
    std::vector<double> lam(32);
    for (double& v : lam) v = g(rng);
    SymbolVec z(16);
    for (Symbol& v : z) v = static_cast<Symbol>(rng() & 1);
    for (int c_u : {0, 1}) {
      auto ref = sim.p_mode(lam, c_u, z);
      REQUIRE(ref.size() == 16);
      for (int i = 0; i < 16; ++i) {
        double want = c_u ? f_equal(z[i] ? -lam[2 * i] : lam[2 * i], lam[2 * i + 1])
                          : f_plus(lam[2 * i], lam[2 * i + 1]);
        CHECK(ref[i] == want);
      }
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        sim.randomize_state(seed);
        CHECK(sim.p_mode(lam, c_u, z) == ref);
      }
    }
  }
  SimDecoder bp(cfg(Arch::kBpLine, 16));
  std::vector<double> a(8), b(8);
  for (double& v : a) v = g(rng);
  for (double& v : b) v = g(rng);
  for (int op = 0; op < kBpMsgKinds; ++op) {
    auto ref = bp.bp_p_mode(op, a, b);
    bp.randomize_state(op + 11);
    CHECK(bp.bp_p_mode(op, a, b) == ref);
  }
  CHECK(bp.bp_p_mode(static_cast<int>(BpMsg::kE1A0), a, b)[3] == a[3] + b[3]);

  ArchConfig gc = cfg(Arch::kGeneralLine, 16);
  gc.ell = 4;
  SimDecoder gen(gc);
  CodeSpec s(Kernel::triangular4(), 2);
  std::vector<LlrFunction> lam;
  for (int i = 0; i < 16; ++i) lam.push_back(LlrFunction::binary(g(rng)));
  const Matrix& gm = s.kernel().generator();
  for (int r = 0; r < 4; ++r) {
    // Coset of column j is the encoding of a random decided prefix.
    std::vector<SymbolVec> prefix(4, SymbolVec(r));
    SymbolVec coset(16, 0);
    for (int j = 0; j < 4; ++j)
      for (int rr = 0; rr < r; ++rr) {
        prefix[j][rr] = static_cast<Symbol>(rng() & 1);
        for (int i = 0; i < 4; ++i) coset[4 * j + i] ^= prefix[j][rr] & gm[rr][i];
      }
    auto ref = gen.general_p_mode(s, lam, r, coset);
    REQUIRE(ref.size() == 4);
    for (int j = 0; j < 4; ++j) {
      std::vector<LlrFunction> col(lam.begin() + 4 * j, lam.begin() + 4 * j + 4);
      LlrFunction want = kernel_marginal_llr(s.kernel_ptr(), col, prefix[j]);
      CHECK(ref[j].values == want.values);
    }
    gen.randomize_state(r + 21);
    auto again = gen.general_p_mode(s, lam, r, coset);
    for (int j = 0; j < 4; ++j) CHECK(again[j].values == ref[j].values);
  }
}

TEST_CASE("partial encoding indicator") {
  for (int m = 1; m <= 5; ++m) {
    Matrix g = encode_matrix(CodeSpec(Kernel::arikan(), m));
    const int n = 1 << m;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) CHECK(encoding_indicator(m, j, k) == (g[k][j] == 1));
  }
}

TEST_CASE("trace lines") {
  SimDecoder sim(cfg(Arch::kScLine, 8));
  sim.set_trace(true);
  ScRun run = sim.run_sc(arikan_code(8, 0.5), std::vector<double>(8, 1.0));
  long long activations = 0;
  for (int v : run.report.pe_busy_histogram) activations += v;
  CHECK(static_cast<long long>(run.report.trace.size()) == activations);
  for (const std::string& line : run.report.trace) {
    int commas = 0;
    for (char ch : line) commas += ch == ',';
    CHECK(commas == 4);
  }
  sim.set_trace(false);
  CHECK(sim.run_sc(arikan_code(8, 0.5), std::vector<double>(8, 1.0)).report.trace.empty());
}

TEST_CASE("build and run errors") {
  CHECK_THROWS_AS(SimDecoder(cfg(Arch::kScLine, 12)), BuildError);
  CHECK_THROWS_AS(SimDecoder(cfg(Arch::kScLine, 1)), BuildError);
  CHECK_THROWS_AS(SimDecoder(cfg(Arch::kScLine, 8, 0)), BuildError);
  CHECK_THROWS_AS(SimDecoder(cfg(Arch::kBpLineFused, 8)), BuildError);
  ArchConfig lim = cfg(Arch::kScLineLimited, 16);
  lim.limit = 0;
  CHECK_THROWS_AS(SimDecoder{lim}, BuildError);
  lim.limit = 5;
  CHECK_THROWS_AS(SimDecoder{lim}, BuildError);
  lim.limit = 4;
  CHECK_NOTHROW(SimDecoder{lim});
  ArchConfig mc = cfg(Arch::kScLineMulti, 8);
  mc.codewords = 8;
  CHECK_THROWS_AS(SimDecoder{mc}, BuildError);
  mc.codewords = 0;
  CHECK_THROWS_AS(SimDecoder{mc}, BuildError);
  ArchConfig gc = cfg(Arch::kGeneralLine, 8);
  gc.ell = 4;
  CHECK_THROWS_AS(SimDecoder{gc}, BuildError);
  gc.ell = 1;
  CHECK_THROWS_AS(SimDecoder{gc}, BuildError);

  SimDecoder line(cfg(Arch::kScLine, 8));
  CHECK_THROWS_AS(line.run_sc(arikan_code(16, 0.5), std::vector<double>(16)), ContractError);
  CHECK_THROWS_AS(line.run_sc(CodeSpec(Kernel::linear({{1, 1}, {0, 1}}, Alphabet::make(2)), 3),
                              std::vector<double>(8)),
                  ContractError);
  CHECK_THROWS_AS(line.run_bp_line(arikan_code(8, 0.5), std::vector<double>(8), 1), ContractError);
  CHECK_THROWS_AS(SimDecoder(cfg(Arch::kScPipeline, 8)).p_mode(std::vector<double>(8), 0, {}),
                  UnsupportedError);
  ArchConfig g2 = cfg(Arch::kGeneralLine, 4);
  g2.ell = 2;
  std::vector<int> table = {1, 0, 2, 3};
  CodeSpec nonlinear(Kernel::from_map(2, Alphabet::make(2), table), 2);
  CHECK_THROWS_AS(SimDecoder(g2).run_general_line(nonlinear, std::vector<LlrFunction>(4)),
                  UnsupportedError);
  CHECK(parse_arch("sc-line-limited") == Arch::kScLineLimited);
  CHECK(arch_name(Arch::kBpLine) == "bp-line");
  CHECK_THROWS_AS(parse_arch("sc-tree"), ParseError);
}
