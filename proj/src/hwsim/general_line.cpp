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

#include "polar/marginal.hpp"
#include "polar/sc.hpp"
#include "units.hpp"

namespace polar::hwsim::detail {

namespace {

bool block_frozen(const CodeSpec& spec, int off, int len) {
  for (int i = off; i < off + len; ++i)
    if (!spec.is_frozen(i)) return false;
  return true;
}

}  // namespace

GeneralUnit::GeneralUnit(SimContext& ctx, int len, int ell)
    : ctx_(ctx), len_(len), ell_(ell), coset_(len, 0), name_("general" + std::to_string(len)) {
  if (len == ell) {
    base_pe_ = ctx.new_pe();
    return;
  }
  for (int i = 0; i < len / ell - len / (ell * ell); ++i) aux_.push_back(ctx.new_pe());
  child_ = std::make_unique<GeneralUnit>(ctx, len / ell, ell);
}

void GeneralUnit::bind(const Kernel* k) {
  kernel_ = k;
  q_ = k->q();
  if (len_ > ell_) r_.assign(static_cast<size_t>(len_ / ell_) * q_, 0.0);
  if (child_) child_->bind(k);
}

void GeneralUnit::pe_marginal(int pe, const double* lam, int r, const Symbol* coset, double* out,
                              bool* flag) {
  ctx_.activate(pe);
  const Alphabet& f = kernel_->alphabet();
  const Matrix& g = kernel_->generator();
  const int q = q_;
  std::vector<double> lw(static_cast<size_t>(ell_) * q);
  for (int i = 0; i < ell_; ++i) normalized_log_weights(lam + i * q, q, &lw[static_cast<size_t>(i) * q]);
  const int free_rows = ell_ - r - 1;
  const long long n_suf = ipow_ll(q, free_rows);
  std::vector<Symbol> o(ell_), digits(free_rows);
  std::vector<double> a(q);
  for (int t = 0; t < q; ++t) {
    LogSumAcc acc;
    for (long long suf = 0; suf < n_suf; ++suf) {
      long long s = suf;
      for (int d = 0; d < free_rows; ++d, s /= q) digits[d] = static_cast<Symbol>(s % q);
      for (int i = 0; i < ell_; ++i) {
        Symbol v = f.add(coset[i], f.mul(t, g[r][i]));
        for (int d = 0; d < free_rows; ++d) v = f.add(v, f.mul(digits[d], g[r + 1 + d][i]));
        o[i] = v;
      }
      double term = 0.0;
      for (int i = 0; i < ell_; ++i) term += lw[static_cast<size_t>(i) * q + o[i]];
      acc.add(term);
    }
    a[t] = acc.value();
  }
  bool bad = false;
  llr_from_logsums(a.data(), q, out, &bad);
  if (bad && flag) *flag = true;
  if (ctx_.tracing()) {
    std::string in = "r=" + std::to_string(r) + ";coset=";
    for (int i = 0; i < ell_; ++i) in += (i ? " " : "") + std::to_string(coset[i]);
    std::string res;
    for (int t = 0; t < q; ++t) res += (t ? " " : "") + fmt_llr(out[t]);
    ctx_.log(name_ + ".pe" + std::to_string(pe), "marginal", in, res);
  }
}

void GeneralUnit::issue_p(const double* lam, int c_u, const Symbol* coset, double* out, bool* flag) {
  const int q = q_;
  if (len_ == ell_) {
    pe_marginal(base_pe_, lam, c_u, coset, out, flag);
    return;
  }
  const int cols = len_ / ell_;
  const int child_cols = cols / ell_;
  child_->issue_p(lam, c_u, coset, out, flag);
  for (int j = child_cols; j < cols; ++j)
    pe_marginal(aux_[j - child_cols], lam + static_cast<size_t>(j) * ell_ * q, c_u, coset + j * ell_,
                out + static_cast<size_t>(j) * q, flag);
}

void GeneralUnit::s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) {
  const Alphabet& f = kernel_->alphabet();
  const Matrix& g = kernel_->generator();
  const int q = q_;
  std::fill(coset_.begin(), coset_.end(), 0);
  if (len_ == ell_) {
    std::vector<double> llr(q);
    std::vector<char> allowed(q);
    for (int r = 0; r < ell_; ++r) {
      bool bad = false;
      pe_marginal(base_pe_, lam, r, coset_.data(), llr.data(), &bad);
      const int idx = off + r;
      for (int t = 0; t < q; ++t) allowed[t] = !spec.is_frozen(idx) || t == spec.frozen_value(idx);
      if (bad && !spec.is_frozen(idx)) ctx_.contradiction = true;
      const Symbol d = pick_min_llr(llr.data(), q, allowed);
      ctx_.end_step();
      u[r] = d;
      for (int i = 0; i < ell_; ++i) coset_[i] = f.add(coset_[i], f.mul(d, g[r][i]));
    }
    std::copy(coset_.begin(), coset_.end(), x);
    return;
  }
  const int sub = len_ / ell_;
  std::vector<Symbol> xs(sub);
  for (int r = 0; r < ell_; ++r) {
    bool bad = false;
    issue_p(lam, r, coset_.data(), r_.data(), &bad);
    ctx_.end_step();
    if (bad && !block_frozen(spec, off + r * sub, sub)) ctx_.contradiction = true;
    child_->s_mode(spec, r_.data(), off + r * sub, u + r * sub, xs.data());
    for (int j = 0; j < sub; ++j)
      for (int i = 0; i < ell_; ++i)
        coset_[j * ell_ + i] = f.add(coset_[j * ell_ + i], f.mul(xs[j], g[r][i]));
  }
  std::copy(coset_.begin(), coset_.end(), x);
}

Counts GeneralUnit::counts() const {
  Counts c;
  if (len_ == ell_) {
    c.pes = 1;
    return c;
  }
  c = child_->counts();
  c.pes += static_cast<long long>(aux_.size());
  c.registers += len_ / ell_;
  c.muxes += len_ / ell_;
  c.mux_depth += 1;
  return c;
}

void GeneralUnit::randomize(Rng& rng) {
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  std::uniform_int_distribution<int> s(0, q_ - 1);
  for (double& v : r_) v = d(rng);
  for (Symbol& v : coset_) v = s(rng);
  if (child_) child_->randomize(rng);
}

}  // namespace polar::hwsim::detail
