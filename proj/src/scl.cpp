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

#include "polar/scl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polar/channel.hpp"
#include "polar/error.hpp"
#include "polar/marginal.hpp"
#include "polar/sc.hpp"

namespace polar {

ListState::ListState(int q_, int rows_, int cols_)
    : q(q_), rows(rows_), cols(cols_), rho_in(rows_),
      pi(static_cast<size_t>(rows_) * cols_ * q_, 0.0) {}

ListState ListState::from_llrs(const std::vector<LlrFunction>& llrs) {
  if (llrs.empty()) throw ShapeError("empty llr vector");
  ListState st(llrs[0].q(), 1, static_cast<int>(llrs.size()));
  for (int c = 0; c < st.cols; ++c) {
    auto w = likelihoods_from_llr(llrs[c]);
    if (static_cast<int>(w.size()) != st.q) throw ShapeError("mixed alphabet sizes");
    for (int b = 0; b < st.q; ++b) st.at(0, c, b) = w[b];
  }
  return st;
}

ListState ListState::from_binary_llrs(const std::vector<double>& llrs) {
  return from_llrs(to_llr_functions(llrs));
}

namespace {

// Dense [row][col][sym] block.
struct Block {
  int rows = 0, cols = 0, q = 2;
  std::vector<double> v;
  Block() = default;
  Block(int r, int c, int qq) : rows(r), cols(c), q(qq), v(static_cast<size_t>(r) * c * qq, 0.0) {}
  double& at(int r, int c, int b) { return v[(static_cast<size_t>(r) * cols + c) * q + b]; }
  double at(int r, int c, int b) const { return v[(static_cast<size_t>(r) * cols + c) * q + b]; }
  const double* cell(int r, int c) const { return &v[(static_cast<size_t>(r) * cols + c) * q]; }
  double* cell(int r, int c) { return &v[(static_cast<size_t>(r) * cols + c) * q]; }
};

void normalize_columns(Block& p) {
  for (int c = 0; c < p.cols; ++c) {
    double m = 0.0;
    for (int r = 0; r < p.rows; ++r)
      for (int b = 0; b < p.q; ++b) m = std::max(m, p.at(r, c, b));
    if (m > 0.0)
      for (int r = 0; r < p.rows; ++r)
        for (int b = 0; b < p.q; ++b) p.at(r, c, b) /= m;
  }
}

struct Node {
  int rho = 0;
  std::vector<int> s;
  std::vector<SymbolVec> u;  // rho x len
  std::vector<SymbolVec> x;  // rho x len
  std::vector<double> scores;
};

struct Candidate {
  int row;
  int sym;
  double score;
};

// Keeps the best min(#candidates, M); near-equal scores are ordered by row,
// then symbol.
std::vector<Candidate> prune(std::vector<Candidate> c, int m, SclStats* stats) {
  if (stats) stats->ops += static_cast<long long>(c.size());
  std::stable_sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.row != b.row) return a.row < b.row;
    return a.sym < b.sym;
  });
  for (size_t i = 0; i < c.size();) {
    size_t j = i + 1;
    double lead = c[i].score;
    while (j < c.size() && c[j].score >= lead * (1.0 - kTieTolerance)) ++j;
    std::sort(c.begin() + i, c.begin() + j, [](const Candidate& a, const Candidate& b) {
      return a.row != b.row ? a.row < b.row : a.sym < b.sym;
    });
    i = j;
  }
  if (static_cast<int>(c.size()) > m) {
    if (stats) {
      ++stats->prunes;
      double kept_min = c[0].score, dropped_max = 0.0;
      for (int i = 0; i < m; ++i) kept_min = std::min(kept_min, c[i].score);
      for (size_t i = m; i < c.size(); ++i) dropped_max = std::max(dropped_max, c[i].score);
      if (kept_min < dropped_max * (1.0 - 2 * kTieTolerance)) stats->monotone = false;
    }
    c.resize(m);
  }
  return c;
}

void scale_scores(std::vector<double>& s) {
  double m = 0.0;
  for (double v : s) m = std::max(m, v);
  if (m > 0.0)
    for (double& v : s) v /= m;
}

// ---------------------------------------------------------------- Arikan

Node base2(const Block& pi, int rho_in, PairFrozen fz, int m, SclStats* stats) {
  Block p(rho_in, 1, 2);
  for (int i = 0; i < rho_in; ++i)
    for (int b = 0; b < 2; ++b)
      p.at(i, 0, b) = 0.5 * (pi.at(i, 0, b) * pi.at(i, 1, 0) + pi.at(i, 0, b ^ 1) * pi.at(i, 1, 1));
  if (stats) stats->ops += 2LL * rho_in;
  normalize_columns(p);
  std::vector<int> s0;
  std::vector<Symbol> u0;
  if (fz.u >= 0) {
    s0.resize(rho_in);
    std::iota(s0.begin(), s0.end(), 0);
    u0.assign(rho_in, fz.u);
  } else {
    std::vector<Candidate> c;
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < rho_in; ++i) c.push_back({i, b, p.at(i, 0, b)});
    for (const auto& k : prune(std::move(c), m, stats)) {
      s0.push_back(k.row);
      u0.push_back(k.sym);
    }
  }
  const int rho0 = static_cast<int>(s0.size());
  Block p2(rho0, 1, 2);
  for (int i = 0; i < rho0; ++i)
    for (int b = 0; b < 2; ++b) p2.at(i, 0, b) = pi.at(s0[i], 0, u0[i] ^ b) * pi.at(s0[i], 1, b);
  if (stats) stats->ops += 2LL * rho0;
  normalize_columns(p2);
  Node out;
  if (fz.v >= 0) {
    for (int i = 0; i < rho0; ++i) {
      out.s.push_back(s0[i]);
      out.u.push_back({u0[i], fz.v});
      out.x.push_back({u0[i] ^ fz.v, fz.v});
      out.scores.push_back(p2.at(i, 0, fz.v));
    }
  } else {
    std::vector<Candidate> c;
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < rho0; ++i) c.push_back({i, b, p2.at(i, 0, b)});
    for (const auto& k : prune(std::move(c), m, stats)) {
      int sig = k.row;
      out.s.push_back(s0[sig]);
      out.u.push_back({u0[sig], k.sym});
      out.x.push_back({u0[sig] ^ k.sym, k.sym});
      out.scores.push_back(k.score);
    }
  }
  out.rho = static_cast<int>(out.s.size());
  return out;
}

Node arikan_rec(const CodeSpec& spec, int off, int len, const Block& pi, int rho_in, int m,
                SclStats* stats) {
  if (len == 2) {
    PairFrozen fz;
    if (spec.is_frozen(off)) fz.u = spec.frozen_value(off);
    if (spec.is_frozen(off + 1)) fz.v = spec.frozen_value(off + 1);
    return base2(pi, rho_in, fz, m, stats);
  }
  const int half = len / 2;
  Block p(rho_in, half, 2);
  for (int i = 0; i < rho_in; ++i)
    for (int j = 0; j < half; ++j) {
      const double* a = pi.cell(i, 2 * j);
      const double* b = pi.cell(i, 2 * j + 1);
      p.at(i, j, 0) = 0.5 * (a[0] * b[0] + a[1] * b[1]);
      p.at(i, j, 1) = 0.5 * (a[1] * b[0] + a[0] * b[1]);
    }
  if (stats) stats->ops += 2LL * rho_in * half;
  normalize_columns(p);
  Node r0 = arikan_rec(spec, off, half, p, rho_in, m, stats);
  Block p2(r0.rho, half, 2);
  for (int i = 0; i < r0.rho; ++i) {
    const int src = r0.s[i];
    for (int j = 0; j < half; ++j) {
      const int x0 = r0.x[i][j];
      const double* a = pi.cell(src, 2 * j);
      const double* b = pi.cell(src, 2 * j + 1);
      p2.at(i, j, 0) = a[x0] * b[0];
      p2.at(i, j, 1) = a[x0 ^ 1] * b[1];
    }
  }
  if (stats) stats->ops += 2LL * r0.rho * half;
  normalize_columns(p2);
  Node r1 = arikan_rec(spec, off + half, half, p2, r0.rho, m, stats);
  Node out;
  out.rho = r1.rho;
  out.scores = r1.scores;
  for (int i = 0; i < r1.rho; ++i) {
    const int sig = r1.s[i];
    out.s.push_back(r0.s[sig]);
    SymbolVec u(len), x(len);
    for (int j = 0; j < half; ++j) {
      u[j] = r0.u[sig][j];
      u[half + j] = r1.u[i][j];
      x[2 * j] = r0.x[sig][j] ^ r1.x[i][j];
      x[2 * j + 1] = r1.x[i][j];
    }
    out.u.push_back(std::move(u));
    out.x.push_back(std::move(x));
  }
  return out;
}

Block block_from_state(const ListState& st) {
  if (st.rho_in < 1 || st.rho_in > st.rows) throw ContractError("rho_in must be in [1, rows]");
  Block b(st.rho_in, st.cols, st.q);
  std::copy(st.pi.begin(), st.pi.begin() + static_cast<long>(b.v.size()), b.v.begin());
  return b;
}

ListResult to_result(Node&& n) {
  ListResult r;
  r.rho_out = n.rho;
  r.s = std::move(n.s);
  r.u_list = std::move(n.u);
  r.x_list = std::move(n.x);
  r.scores = std::move(n.scores);
  scale_scores(r.scores);
  return r;
}

void check_list_args(const CodeSpec& spec, const ListState& st, int m) {
  if (m < 1) throw ParameterError("list size must be at least 1");
  if (st.cols != spec.n_total()) throw ShapeError("likelihood matrices have wrong width");
  if (st.q != spec.q()) throw ShapeError("likelihood matrices have wrong alphabet");
  if (st.rho_in < 1) throw ContractError("rho_in must be at least 1");
}

// --------------------------------------------------------------- general

struct Lanes {
  int width = 1;
  int big_q = 2;
  std::vector<int> off;
};

struct GenCtx {
  const CodeSpec& spec;
  int m;
  SclStats* stats;
  int q;
};

bool all_frozen(const CodeSpec& spec, const Lanes& ln, int len) {
  for (int o : ln.off)
    for (int p = 0; p < len; ++p)
      if (!spec.is_frozen(o + p)) return false;
  return true;
}

Symbol frozen_symbol(const CodeSpec& spec, const Lanes& ln, int p, int q) {
  Symbol v = 0;
  for (int l = 0, place = 1; l < ln.width; ++l, place *= q) v += spec.frozen_value(ln.off[l] + p) * place;
  return v;
}

Node general_rec(GenCtx& c, const Lanes& ln, int len, const Block& pi, int rho_in) {
  const CodeSpec& spec = c.spec;
  const int q = c.q;
  const int bq = ln.big_q;
  if (len == 1) {
    std::vector<Candidate> cand;
    for (int t = 0; t < bq; ++t) {
      bool ok = true;
      for (int l = 0, place = 1; l < ln.width; ++l, place *= q) {
        int g = ln.off[l];
        if (spec.is_frozen(g) && (t / place) % q != spec.frozen_value(g)) ok = false;
      }
      if (!ok) continue;
      for (int i = 0; i < rho_in; ++i) cand.push_back({i, t, pi.at(i, 0, t)});
    }
    Node out;
    for (const auto& k : prune(std::move(cand), c.m, c.stats)) {
      out.s.push_back(k.row);
      out.u.push_back({k.sym});
      out.x.push_back({k.sym});
      out.scores.push_back(k.score);
    }
    out.rho = static_cast<int>(out.s.size());
    return out;
  }
  const Kernel& k = spec.kernel();
  const int ell = k.ell();
  const int sub = len / ell;
  auto lk = LaneKernel::get(spec.kernel_ptr(), ln.width);

  // Current rows: source row in pi, outer codewords decided so far, inputs.
  int rho = rho_in;
  std::vector<int> src(rho);
  std::iota(src.begin(), src.end(), 0);
  std::vector<std::vector<Symbol>> gam(rho, std::vector<Symbol>(static_cast<size_t>(ell) * sub, 0));
  std::vector<SymbolVec> uu(rho, SymbolVec(len, 0));
  std::vector<double> scores(rho, 1.0);
  std::vector<const double*> rows(ell);

  for (const GlueGroup& g : k.glue()) {
    const int r = g.start, s = g.size;
    Lanes sl;
    sl.width = ln.width * s;
    sl.big_q = static_cast<int>(ipow_ll(bq, s));
    for (int kk = 0; kk < s; ++kk)
      for (int l = 0; l < ln.width; ++l) sl.off.push_back(ln.off[l] + (r + kk) * sub);
    const int sq = sl.big_q;
    Block p(rho, sub, sq);
    for (int i = 0; i < rho; ++i) {
      for (int j = 0; j < sub; ++j) {
        long long prefix = 0;
        for (int rr = r - 1; rr >= 0; --rr) prefix = prefix * bq + gam[i][static_cast<size_t>(rr) * sub + j];
        for (int o = 0; o < ell; ++o) rows[o] = pi.cell(src[i], j * ell + o);
        lane_marginal_prob(*lk, rows.data(), prefix, r, s, p.cell(i, j));
      }
    }
    if (c.stats) c.stats->ops += static_cast<long long>(rho) * sub * sq;
    normalize_columns(p);

    Node res;
    if (all_frozen(spec, sl, sub)) {
      // Deterministic outer code: every row continues unchanged; its score is
      // the likelihood of the fixed outer codeword.
      SymbolVec uf(sub), xf(sub);
      for (int pos = 0; pos < sub; ++pos) uf[pos] = frozen_symbol(spec, sl, pos, q);
      auto lks = LaneKernel::get(spec.kernel_ptr(), sl.width);
      lane_encode(*lks, sub, uf.data(), xf.data());
      std::vector<double> logs(rho, 0.0);
      double best = -kInf;
      for (int i = 0; i < rho; ++i) {
        for (int j = 0; j < sub; ++j) logs[i] += std::log(p.at(i, j, xf[j]));
        best = std::max(best, logs[i]);
      }
      res.rho = rho;
      for (int i = 0; i < rho; ++i) {
        res.s.push_back(i);
        res.u.push_back(uf);
        res.x.push_back(xf);
        res.scores.push_back(best == -kInf ? 0.0 : std::exp(logs[i] - best));
      }
    } else {
      res = general_rec(c, sl, sub, p, rho);
    }

    std::vector<int> nsrc(res.rho);
    std::vector<std::vector<Symbol>> ngam(res.rho);
    std::vector<SymbolVec> nuu(res.rho);
    for (int i = 0; i < res.rho; ++i) {
      const int sig = res.s[i];
      nsrc[i] = src[sig];
      ngam[i] = gam[sig];
      nuu[i] = uu[sig];
      for (int kk = 0, place = 1; kk < s; ++kk, place *= bq)
        for (int pos = 0; pos < sub; ++pos) {
          ngam[i][static_cast<size_t>(r + kk) * sub + pos] = (res.x[i][pos] / place) % bq;
          nuu[i][(r + kk) * sub + pos] = (res.u[i][pos] / place) % bq;
        }
    }
    rho = res.rho;
    src.swap(nsrc);
    gam.swap(ngam);
    uu.swap(nuu);
    scores = res.scores;
  }

  Node out;
  out.rho = rho;
  out.s = src;
  out.u = uu;
  out.scores = scores;
  std::vector<Symbol> col(ell), o(ell);
  for (int i = 0; i < rho; ++i) {
    SymbolVec x(len);
    for (int j = 0; j < sub; ++j) {
      for (int r = 0; r < ell; ++r) col[r] = gam[i][static_cast<size_t>(r) * sub + j];
      lk->apply(col.data(), o.data());
      for (int t = 0; t < ell; ++t) x[j * ell + t] = o[t];
    }
    out.x.push_back(std::move(x));
  }
  return out;
}

}  // namespace

ListResult scl_base2(const ListState& state, PairFrozen frozen, int list_size, SclStats* stats) {
  if (state.cols != 2 || state.q != 2) throw ShapeError("base case needs two binary columns");
  if (state.rho_in < 1) throw ContractError("rho_in must be at least 1");
  if (list_size < 1) throw ParameterError("list size must be at least 1");
  return to_result(base2(block_from_state(state), state.rho_in, frozen, list_size, stats));
}

ListResult decode_scl_arikan(const CodeSpec& spec, const ListState& state, int list_size,
                             SclStats* stats) {
  if (!is_arikan(spec.kernel())) throw UnsupportedError("Arikan list decoder needs the Arikan kernel");
  check_list_args(spec, state, list_size);
  Block pi = block_from_state(state);
  return to_result(arikan_rec(spec, 0, spec.n_total(), pi, state.rho_in, list_size, stats));
}

ListResult decode_scl_general(const CodeSpec& spec, const ListState& state, int list_size,
                              SclStats* stats) {
  check_list_args(spec, state, list_size);
  Block pi = block_from_state(state);
  GenCtx c{spec, list_size, stats, spec.q()};
  Lanes top;
  top.width = 1;
  top.big_q = spec.q();
  top.off = {0};
  return to_result(general_rec(c, top, spec.n_total(), pi, state.rho_in));
}

ListResult decode_scl(const CodeSpec& spec, const ListState& state, int list_size,
                      SclStats* stats) {
  if (is_arikan(spec.kernel())) return decode_scl_arikan(spec, state, list_size, stats);
  return decode_scl_general(spec, state, list_size, stats);
}

std::pair<SymbolVec, SymbolVec> select_final(const ListResult& result,
                                             const std::optional<CrcChecker>& crc,
                                             const CodeSpec* spec) {
  if (result.rho_out < 1) throw ContractError("empty list");
  auto best_of = [&](auto accept) {
    int best = -1;
    for (int i = 0; i < result.rho_out; ++i) {
      if (!accept(i)) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      double a = result.scores[i], b = result.scores[best];
      if (a > b * (1.0 + kTieTolerance)) best = i;
      else if (a >= b * (1.0 - kTieTolerance) && result.u_list[i] < result.u_list[best]) best = i;
    }
    return best;
  };
  int pick = -1;
  if (crc) {
    if (!spec) throw ContractError("CRC selection needs the code specification");
    pick = best_of([&](int i) { return crc->check(*spec, result.u_list[i]); });
  }
  if (pick < 0) pick = best_of([](int) { return true; });
  return {result.u_list[pick], result.x_list[pick]};
}

}  // namespace polar
