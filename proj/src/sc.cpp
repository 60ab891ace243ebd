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

#include "polar/sc.hpp"

#include "polar/error.hpp"
#include "polar/marginal.hpp"

namespace polar {

bool is_arikan(const Kernel& k) {
  if (k.ell() != 2 || k.q() != 2 || !k.is_linear()) return false;
  const Matrix& g = k.generator();
  return g[0][0] == 1 && g[0][1] == 0 && g[1][0] == 1 && g[1][1] == 1;
}

Symbol pick_min_llr(const double* lam, int n, const std::vector<char>& allowed) {
  int best = -1;
  for (int t = 0; t < n; ++t)
    if (allowed[t] && (best < 0 || lam[t] < lam[best])) best = t;
  if (best < 0) throw ContractError("no allowed symbol");
  for (int t = 0; t < n; ++t)
    if (allowed[t] && lam[t] <= lam[best] + kTieTolerance) return t;
  return best;
}

namespace {

void check_llr_length(const CodeSpec& spec, size_t n) {
  if (static_cast<int>(n) != spec.n_total()) throw ShapeError("llr vector has wrong length");
}

struct ArikanCtx {
  const CodeSpec& spec;
  const ScOptions& opt;
  ScResult& res;
};

Symbol arikan_leaf(ArikanCtx& c, int idx, double l) {
  if (c.opt.trace) c.res.trace.push_back({idx, LlrFunction::binary(l)});
  Symbol d = decide_binary(l);
  c.res.raw_decisions[idx] = d;
  return c.opt.genie ? (*c.opt.genie)[idx] : d;
}

void arikan_rec(ArikanCtx& c, int off, int len, const double* lam, Symbol* u, Symbol* x) {
  const CodeSpec& spec = c.spec;
  if (len == 2) {
    Symbol a, b;
    if (spec.is_frozen(off)) a = spec.frozen_value(off);
    else a = arikan_leaf(c, off, f_plus(lam[0], lam[1], c.opt.fplus));
    if (spec.is_frozen(off + 1)) {
      b = spec.frozen_value(off + 1);
    } else {
      double l = f_equal_checked(a ? -lam[0] : lam[0], lam[1], &c.res.contradiction);
      b = arikan_leaf(c, off + 1, l);
    }
    u[0] = a;
    u[1] = b;
    x[0] = a ^ b;
    x[1] = b;
    return;
  }
  const int half = len / 2;
  std::vector<double> l(half);
  std::vector<Symbol> x0(half), x1(half);
  for (int i = 0; i < half; ++i) l[i] = f_plus(lam[2 * i], lam[2 * i + 1], c.opt.fplus);
  arikan_rec(c, off, half, l.data(), u, x0.data());
  for (int i = 0; i < half; ++i)
    l[i] = f_equal_checked(x0[i] ? -lam[2 * i] : lam[2 * i], lam[2 * i + 1], &c.res.contradiction);
  arikan_rec(c, off + half, half, l.data(), u + half, x1.data());
  for (int i = 0; i < half; ++i) {
    x[2 * i] = x0[i] ^ x1[i];
    x[2 * i + 1] = x1[i];
  }
}

// A group of w outer codes decoded together; lane l covers inputs
// off[l] + [0, len).
struct Lanes {
  int width = 1;
  int big_q = 2;
  std::vector<int> off;
};

struct GeneralCtx {
  const CodeSpec& spec;
  const ScOptions& opt;
  ScResult& res;
  int q;
};

bool lanes_all_frozen(const CodeSpec& spec, const Lanes& ln, int len) {
  for (int o : ln.off)
    for (int p = 0; p < len; ++p)
      if (!spec.is_frozen(o + p)) return false;
  return true;
}

void general_rec(GeneralCtx& c, const Lanes& ln, int len, const double* lam, Symbol* u,
                 Symbol* x) {
  const CodeSpec& spec = c.spec;
  const int q = c.q;
  const int bq = ln.big_q;
  if (len == 1) {
    std::vector<char> allowed(bq, 1);
    for (int t = 0; t < bq; ++t) {
      int place = 1;
      for (int l = 0; l < ln.width; ++l, place *= q) {
        int g = ln.off[l];
        if (spec.is_frozen(g) && (t / place) % q != spec.frozen_value(g)) allowed[t] = 0;
      }
    }
    if (c.opt.trace) c.res.trace.push_back({ln.off[0], LlrFunction(std::vector<double>(lam, lam + bq))});
    Symbol d = pick_min_llr(lam, bq, allowed);
    Symbol fed = 0;
    int place = 1;
    for (int l = 0; l < ln.width; ++l, place *= q) {
      int g = ln.off[l];
      c.res.raw_decisions[g] = (d / place) % q;
      Symbol v = c.opt.genie ? (*c.opt.genie)[g] : (d / place) % q;
      fed += v * place;
    }
    u[0] = fed;
    x[0] = fed;
    return;
  }
  const Kernel& k = spec.kernel();
  const int ell = k.ell();
  const int sub = len / ell;
  auto lk = LaneKernel::get(spec.kernel_ptr(), ln.width);
  std::vector<double> lw(static_cast<size_t>(len) * bq);
  for (int p = 0; p < len; ++p) normalized_log_weights(lam + static_cast<size_t>(p) * bq, bq, &lw[static_cast<size_t>(p) * bq]);
  std::vector<Symbol> gamma(static_cast<size_t>(ell) * sub);
  std::vector<const double*> rows(ell);
  for (const GlueGroup& g : k.glue()) {
    const int r = g.start, s = g.size;
    Lanes sl;
    sl.width = ln.width * s;
    sl.big_q = static_cast<int>(ipow_ll(bq, s));
    for (int kk = 0; kk < s; ++kk)
      for (int l = 0; l < ln.width; ++l) sl.off.push_back(ln.off[l] + (r + kk) * sub);
    if (lanes_all_frozen(spec, sl, sub)) {
      std::vector<Symbol> uf(sub);
      for (int kk = 0; kk < s; ++kk) {
        for (int p = 0; p < sub; ++p) {
          Symbol v = 0;
          int place = 1;
          for (int l = 0; l < ln.width; ++l, place *= q) v += spec.frozen_value(ln.off[l] + (r + kk) * sub + p) * place;
          uf[p] = v;
          u[(r + kk) * sub + p] = v;
          if (!c.opt.genie) {
            int pl = 1;
            for (int l = 0; l < ln.width; ++l, pl *= q) c.res.raw_decisions[ln.off[l] + (r + kk) * sub + p] = (v / pl) % q;
          }
        }
        lane_encode(*lk, sub, uf.data(), &gamma[static_cast<size_t>(r + kk) * sub]);
      }
      continue;
    }
    const int sq = sl.big_q;
    std::vector<double> child(static_cast<size_t>(sub) * sq);
    for (int j = 0; j < sub; ++j) {
      long long prefix = 0;
      for (int rr = r - 1; rr >= 0; --rr) prefix = prefix * bq + gamma[static_cast<size_t>(rr) * sub + j];
      for (int i = 0; i < ell; ++i) rows[i] = &lw[static_cast<size_t>(j * ell + i) * bq];
      lane_marginal_llr(*lk, rows.data(), prefix, r, s, &child[static_cast<size_t>(j) * sq], &c.res.contradiction);
    }
    std::vector<Symbol> us(sub), xs(sub);
    general_rec(c, sl, sub, child.data(), us.data(), xs.data());
    for (int kk = 0, place = 1; kk < s; ++kk, place *= bq) {
      for (int p = 0; p < sub; ++p) {
        gamma[static_cast<size_t>(r + kk) * sub + p] = (xs[p] / place) % bq;
        u[(r + kk) * sub + p] = (us[p] / place) % bq;
      }
    }
  }
  std::vector<Symbol> col(ell), out(ell);
  for (int j = 0; j < sub; ++j) {
    for (int r = 0; r < ell; ++r) col[r] = gamma[static_cast<size_t>(r) * sub + j];
    lk->apply(col.data(), out.data());
    for (int i = 0; i < ell; ++i) x[j * ell + i] = out[i];
  }
}

}  // namespace

ScResult decode_sc_arikan(const CodeSpec& spec, const std::vector<double>& llrs,
                          const ScOptions& opt) {
  if (!is_arikan(spec.kernel())) throw UnsupportedError("Arikan decoder needs the Arikan kernel");
  check_llr_length(spec, llrs.size());
  const int n = spec.n_total();
  ScResult res;
  res.u_hat.assign(n, 0);
  res.x_hat.assign(n, 0);
  res.raw_decisions.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (spec.is_frozen(i)) res.raw_decisions[i] = spec.frozen_value(i);
  ArikanCtx c{spec, opt, res};
  arikan_rec(c, 0, n, llrs.data(), res.u_hat.data(), res.x_hat.data());
  return res;
}

ScResult decode_sc_general(const CodeSpec& spec, const std::vector<LlrFunction>& llrs,
                           const ScOptions& opt) {
  check_llr_length(spec, llrs.size());
  const int n = spec.n_total();
  const int q = spec.q();
  std::vector<double> lam(static_cast<size_t>(n) * q);
  for (int i = 0; i < n; ++i) {
    if (llrs[i].q() != q) throw ShapeError("llr function has wrong alphabet size");
    for (int t = 0; t < q; ++t) lam[static_cast<size_t>(i) * q + t] = llrs[i][t];
  }
  ScResult res;
  res.u_hat.assign(n, 0);
  res.x_hat.assign(n, 0);
  res.raw_decisions.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (spec.is_frozen(i)) res.raw_decisions[i] = spec.frozen_value(i);
  GeneralCtx c{spec, opt, res, q};
  Lanes top;
  top.width = 1;
  top.big_q = q;
  top.off = {0};
  if (lanes_all_frozen(spec, top, n)) {
    for (int i = 0; i < n; ++i) res.u_hat[i] = spec.frozen_value(i);
    encode_raw(spec.kernel(), n, res.u_hat.data(), res.x_hat.data());
    return res;
  }
  general_rec(c, top, n, lam.data(), res.u_hat.data(), res.x_hat.data());
  return res;
}

ScResult decode_sc_general(const CodeSpec& spec, const std::vector<double>& binary_llrs,
                           const ScOptions& opt) {
  std::vector<LlrFunction> l;
  l.reserve(binary_llrs.size());
  for (double v : binary_llrs) l.push_back(LlrFunction::binary(v));
  return decode_sc_general(spec, l, opt);
}

ScResult decode_sc(const CodeSpec& spec, const std::vector<LlrFunction>& llrs,
                   const ScOptions& opt) {
  if (is_arikan(spec.kernel())) {
    check_llr_length(spec, llrs.size());
    std::vector<double> b(llrs.size());
    for (size_t i = 0; i < llrs.size(); ++i) b[i] = llrs[i][1];
    return decode_sc_arikan(spec, b, opt);
  }
  return decode_sc_general(spec, llrs, opt);
}

LlrFunction kernel_marginal_llr(const KernelPtr& kernel, const std::vector<LlrFunction>& lambda,
                                const SymbolVec& decided) {
  const int ell = kernel->ell();
  const int q = kernel->q();
  const int k = static_cast<int>(decided.size());
  if (static_cast<int>(lambda.size()) != ell) throw ShapeError("need one llr function per kernel output");
  int gi = kernel->group_starting_at(k);
  if (gi < 0) throw ContractError("decided prefix does not end on a glue group boundary");
  const int s = kernel->glue()[gi].size;
  auto lk = LaneKernel::get(kernel, 1);
  std::vector<double> lw(static_cast<size_t>(ell) * q);
  std::vector<const double*> rows(ell);
  for (int i = 0; i < ell; ++i) {
    if (lambda[i].q() != q) throw ShapeError("llr function has wrong alphabet size");
    normalized_log_weights(lambda[i].values.data(), q, &lw[static_cast<size_t>(i) * q]);
    rows[i] = &lw[static_cast<size_t>(i) * q];
  }
  long long prefix = 0;
  for (int i = k - 1; i >= 0; --i) {
    if (!kernel->alphabet().contains(decided[i])) throw DomainError("symbol outside alphabet");
    prefix = prefix * q + decided[i];
  }
  std::vector<double> out(ipow_ll(q, s));
  bool contradiction = false;
  lane_marginal_llr(*lk, rows.data(), prefix, k, s, out.data(), &contradiction);
  return LlrFunction(out);
}

}  // namespace polar
