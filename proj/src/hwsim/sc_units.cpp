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

#include "polar/error.hpp"
#include "units.hpp"

namespace polar::hwsim::detail {

namespace {

void randomize_llrs(std::vector<double>& v, Rng& rng) {
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  for (double& x : v) x = d(rng);
}

Symbol leaf_decision(const CodeSpec& spec, int idx, double l) {
  return spec.is_frozen(idx) ? spec.frozen_value(idx) : decide_binary(l);
}

// Decision stage of a length-2 unit: u from lam[0], lam[1]; then v.
void base_decode(SimContext& ctx, int pe, const std::string& name, const CodeSpec& spec,
                 const double* lam, int off, Symbol* u, Symbol* x) {
  const double lu = sc_pe(ctx, pe, name, lam[0], lam[1], 0, 0, nullptr);
  const Symbol a = leaf_decision(spec, off, lu);
  if (ctx.on_decide) ctx.on_decide(off, a);
  ctx.end_step();
  bool bad = false;
  const double lv = sc_pe(ctx, pe, name, lam[0], lam[1], 1, a, &bad);
  if (bad && !spec.is_frozen(off + 1)) ctx.contradiction = true;
  const Symbol b = leaf_decision(spec, off + 1, lv);
  if (ctx.on_decide) ctx.on_decide(off + 1, b);
  ctx.end_step();
  u[0] = a;
  u[1] = b;
  x[0] = a ^ b;
  x[1] = b;
}

void combine(int half, const Symbol* x0, const Symbol* x1, Symbol* x) {
  for (int i = 0; i < half; ++i) {
    x[2 * i] = x0[i] ^ x1[i];
    x[2 * i + 1] = x1[i];
  }
}

}  // namespace

double sc_pe(SimContext& ctx, int pe, const std::string& unit, double a, double b, int c_u, Symbol z,
             bool* flag) {
  ctx.activate(pe);
  double r;
  if (c_u == 0) {
    r = f_plus(a, b);
  } else {
    bool bad = false;
    r = f_equal_checked(z ? -a : a, b, &bad);
    if (bad && flag) *flag = true;
  }
  if (ctx.tracing())
    ctx.log(unit + ".pe" + std::to_string(pe), c_u == 0 ? "f_plus" : "f_equal",
            fmt_llr(a) + ";" + fmt_llr(b) + (c_u ? ";z=" + std::to_string(z) : ""), fmt_llr(r));
  return r;
}

// ---------------------------------------------------------------- pipeline

PipelineUnit::PipelineUnit(SimContext& ctx, int len)
    : ScUnit(ctx, len), lam_(len), name_("pipeline" + std::to_string(len)) {
  for (int i = 0; i < len / 2; ++i) pes_.push_back(ctx.new_pe());
  if (len > 2) child_ = std::make_unique<PipelineUnit>(ctx, len / 2);
}

void PipelineUnit::s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) {
  std::copy(lam, lam + len_, lam_.begin());
  run(spec, off, u, x);
}

void PipelineUnit::run(const CodeSpec& spec, int off, Symbol* u, Symbol* x) {
  if (len_ == 2) {
    base_decode(ctx_, pes_[0], name_, spec, lam_.data(), off, u, x);
    return;
  }
  const int half = len_ / 2;
  std::vector<Symbol> x0(half), x1(half);
  for (int i = 0; i < half; ++i)
    child_->lam_[i] = sc_pe(ctx_, pes_[i], name_, lam_[2 * i], lam_[2 * i + 1], 0, 0, nullptr);
  ctx_.end_step();
  child_->run(spec, off, u, x0.data());
  for (int i = 0; i < half; ++i)
    child_->lam_[i] =
        sc_pe(ctx_, pes_[i], name_, lam_[2 * i], lam_[2 * i + 1], 1, x0[i], &ctx_.contradiction);
  ctx_.end_step();
  child_->run(spec, off + half, u + half, x1.data());
  combine(half, x0.data(), x1.data(), x);
}

void PipelineUnit::p_mode(const double*, int, const Symbol*, double*) {
  throw UnsupportedError("the pipeline decoder has no P-Mode");
}

Counts PipelineUnit::counts() const {
  Counts c;
  if (child_) c = child_->counts();
  c.pes += len_ / 2;
  c.registers += len_;
  return c;
}

void PipelineUnit::randomize(Rng& rng) {
  randomize_llrs(lam_, rng);
  if (child_) child_->randomize(rng);
}

// ---------------------------------------------------------------- line

LineUnit::LineUnit(SimContext& ctx, int len, const std::vector<int>* shared_aux, int owner)
    : ScUnit(ctx, len), owner_(owner), name_("line" + std::to_string(len)) {
  if (len == 2) {
    r_.resize(1);
    base_pe_ = ctx.new_pe();
    return;
  }
  r_.resize(len / 2);
  if (shared_aux) {
    aux_ = *shared_aux;
    aux_shared_ = true;
    name_ += "." + std::to_string(owner);
  } else {
    for (int i = 0; i < len / 4; ++i) aux_.push_back(ctx.new_pe());
  }
  child_ = std::make_unique<LineUnit>(ctx, len / 2);
}

void LineUnit::aux_step(const double* lam, int c_u, const Symbol* z, double* out) {
  if (aux_shared_) ctx_.book_shared(0, owner_);
  const int q = len_ / 4;
  for (int i = 0; i < q; ++i) {
    const double* l = lam + len_ / 2 + 2 * i;
    out[q + i] = sc_pe(ctx_, aux_[i], name_ + ".aux", l[0], l[1], c_u, z ? z[q + i] : 0,
                       &ctx_.contradiction);
  }
}

void LineUnit::issue_p(const double* lam, int c_u, const Symbol* z, double* out) {
  if (len_ == 2) {
    out[0] = sc_pe(ctx_, base_pe_, name_, lam[0], lam[1], c_u, z ? z[0] : 0, &ctx_.contradiction);
    return;
  }
  child_->issue_p(lam, c_u, z, out);
  aux_step(lam, c_u, z, out);
}

void LineUnit::p_mode(const double* lam, int c_u, const Symbol* z, double* out) {
  issue_p(lam, c_u, z, out);
  ctx_.end_step();
}

void LineUnit::s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) {
  if (len_ == 2) {
    base_decode(ctx_, base_pe_, name_, spec, lam, off, u, x);
    return;
  }
  const int half = len_ / 2;
  std::vector<Symbol> x0(half), x1(half);
  p_mode(lam, 0, nullptr, r_.data());
  child_->s_mode(spec, r_.data(), off, u, x0.data());
  p_mode(lam, 1, x0.data(), r_.data());
  child_->s_mode(spec, r_.data(), off + half, u + half, x1.data());
  combine(half, x0.data(), x1.data(), x);
}

Counts LineUnit::counts() const {
  if (len_ == 2) {
    Counts c;
    c.pes = 1;
    c.registers = 1;
    return c;
  }
  Counts c = child_->counts();
  if (!aux_shared_) c.pes += len_ / 4;
  c.registers += len_ / 2;
  c.muxes += len_ / 2;
  c.mux_depth += 1;
  return c;
}

void LineUnit::randomize(Rng& rng) {
  randomize_llrs(r_, rng);
  if (child_) child_->randomize(rng);
}

// ---------------------------------------------------------------- limited

std::unique_ptr<ScUnit> make_limited(SimContext& ctx, int len, int limit) {
  if (limit <= 1 || len == 2) return std::make_unique<LineUnit>(ctx, len);
  return std::make_unique<LimitedUnit>(ctx, len, limit);
}

LimitedUnit::LimitedUnit(SimContext& ctx, int len, int limit)
    : ScUnit(ctx, len), r_(len / 2), child_(make_limited(ctx, len / 2, limit - 1)) {}

void LimitedUnit::p_mode(const double* lam, int c_u, const Symbol* z, double* out) {
  const int q = len_ / 4;
  child_->p_mode(lam, c_u, z, out);
  child_->p_mode(lam + len_ / 2, c_u, z ? z + q : nullptr, out + q);
}

void LimitedUnit::s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) {
  const int half = len_ / 2;
  std::vector<Symbol> x0(half), x1(half);
  p_mode(lam, 0, nullptr, r_.data());
  child_->s_mode(spec, r_.data(), off, u, x0.data());
  p_mode(lam, 1, x0.data(), r_.data());
  child_->s_mode(spec, r_.data(), off + half, u + half, x1.data());
  combine(half, x0.data(), x1.data(), x);
}

Counts LimitedUnit::counts() const {
  Counts c = child_->counts();
  c.registers += len_ / 2;
  c.muxes += len_;
  c.mux_depth += 1;
  return c;
}

void LimitedUnit::randomize(Rng& rng) {
  randomize_llrs(r_, rng);
  child_->randomize(rng);
}

}  // namespace polar::hwsim::detail
