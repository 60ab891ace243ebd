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

#include "units.hpp"

namespace polar::hwsim::detail {

double bp_pe(SimContext& ctx, int pe, const std::string& unit, BpMsg op, double a, double b) {
  ctx.activate(pe);
  ButterflyMessages m;
  switch (op) {
    case BpMsg::kE1A0: m.v_in = a; m.x1_in = b; break;
    case BpMsg::kA0E1: m.u_in = a; m.x0_in = b; break;
    case BpMsg::kUOut: m.x0_in = a; m.e1_a0 = b; break;
    case BpMsg::kVOut: m.a0_e1 = a; m.x1_in = b; break;
    case BpMsg::kX0Out: m.e1_a0 = a; m.u_in = b; break;
    case BpMsg::kX1Out: m.a0_e1 = a; m.v_in = b; break;
  }
  const double r = bp_butterfly_update(m, op, &ctx.contradiction);
  if (ctx.tracing())
    ctx.log(unit + ".pe" + std::to_string(pe), bp_msg_name(op), fmt_llr(a) + ";" + fmt_llr(b),
            fmt_llr(r));
  return r;
}

BpUnit::BpUnit(SimContext& ctx, int len, int realizations)
    : ctx_(ctx), len_(len), rows_(realizations), name_("bp" + std::to_string(len)) {
  const int b = len / 2;
  mem_v_.assign(static_cast<size_t>(rows_) * b, 0.0);
  for (auto* a : {&e1a0_, &a0e1_, &u_in_, &u_out_, &v_out_}) a->assign(b, 0.0);
  if (len == 2) {
    base_pe_ = ctx.new_pe();
    return;
  }
  for (int i = 0; i < len / 4; ++i) aux_.push_back(ctx.new_pe());
  child_ = std::make_unique<BpUnit>(ctx, len / 2, realizations * 2);
}

void BpUnit::init_memory(const CodeSpec& spec) {
  if (len_ == 2) {
    for (int r = 0; r < rows_; ++r) {
      const int vi = 2 * r + 1;
      mem_v_[r] = spec.is_frozen(vi) ? (spec.frozen_value(vi) ? -kInf : kInf) : 0.0;
    }
    return;
  }
  std::fill(mem_v_.begin(), mem_v_.end(), 0.0);
  child_->init_memory(spec);
}

void BpUnit::issue_p(BpMsg op, const double* a, const double* b, double* out) {
  if (len_ == 2) {
    out[0] = bp_pe(ctx_, base_pe_, name_, op, a[0], b[0]);
    return;
  }
  const int q = len_ / 4;
  child_->issue_p(op, a, b, out);
  for (int i = 0; i < q; ++i) out[q + i] = bp_pe(ctx_, aux_[i], name_ + ".aux", op, a[q + i], b[q + i]);
}

void BpUnit::s_mode(const CodeSpec& spec, int rid, const double* x_in, double* x_out, Symbol* u_hat) {
  const int b = len_ / 2;
  std::vector<double> x0(b), x1(b);
  for (int i = 0; i < b; ++i) {
    x0[i] = x_in[2 * i];
    x1[i] = x_in[2 * i + 1];
  }
  double* v_in = &mem_v_[static_cast<size_t>(rid) * b];
  if (len_ == 2) {
    const int ui = 2 * rid, vi = 2 * rid + 1;
    const double u_prior = spec.is_frozen(ui) ? (spec.frozen_value(ui) ? -kInf : kInf) : 0.0;
    // The base PE evaluates a chained pair of rules per activation.
    auto pair = [&](BpMsg first, BpMsg second) {
      ctx_.activate(base_pe_);
      ButterflyMessages m;
      m.u_in = u_prior;
      m.v_in = v_in[0];
      m.x0_in = x0[0];
      m.x1_in = x1[0];
      m.e1_a0 = e1a0_[0];
      m.a0_e1 = a0e1_[0];
      bp_butterfly_update(m, first, &ctx_.contradiction);
      const double r = bp_butterfly_update(m, second, &ctx_.contradiction);
      e1a0_[0] = m.e1_a0;
      a0e1_[0] = m.a0_e1;
      return r;
    };
    u_out_[0] = pair(BpMsg::kE1A0, BpMsg::kUOut);
    u_hat[ui] = spec.is_frozen(ui) ? spec.frozen_value(ui) : decide_binary(u_out_[0]);
    ctx_.end_step();
    v_out_[0] = pair(BpMsg::kA0E1, BpMsg::kVOut);
    u_hat[vi] = spec.is_frozen(vi) ? spec.frozen_value(vi) : decide_binary(v_out_[0]);
    ctx_.end_step();
    x_out[0] = bp_pe(ctx_, base_pe_, name_, BpMsg::kX0Out, e1a0_[0], u_prior);
    ctx_.end_step();
    x_out[1] = bp_pe(ctx_, base_pe_, name_, BpMsg::kX1Out, a0e1_[0], v_in[0]);
    ctx_.end_step();
    if (ctx_.tracing())
      ctx_.log(name_, "decide", "rid=" + std::to_string(rid),
               std::to_string(u_hat[ui]) + ";" + std::to_string(u_hat[vi]));
    return;
  }
  auto step = [&](BpMsg op, const double* a, const double* c, double* out) {
    issue_p(op, a, c, out);
    ctx_.end_step();
  };
  step(BpMsg::kE1A0, v_in, x1.data(), e1a0_.data());
  step(BpMsg::kUOut, x0.data(), e1a0_.data(), u_out_.data());
  child_->s_mode(spec, 2 * rid, u_out_.data(), u_in_.data(), u_hat);
  step(BpMsg::kA0E1, u_in_.data(), x0.data(), a0e1_.data());
  step(BpMsg::kVOut, a0e1_.data(), x1.data(), v_out_.data());
  child_->s_mode(spec, 2 * rid + 1, v_out_.data(), v_in, u_hat);
  step(BpMsg::kE1A0, v_in, x1.data(), e1a0_.data());
  std::vector<double> o0(b), o1(b);
  step(BpMsg::kX0Out, e1a0_.data(), u_in_.data(), o0.data());
  step(BpMsg::kX1Out, a0e1_.data(), v_in, o1.data());
  for (int i = 0; i < b; ++i) {
    x_out[2 * i] = o0[i];
    x_out[2 * i + 1] = o1[i];
  }
}

Counts BpUnit::counts() const {
  Counts c;
  if (child_) c = child_->counts();
  const int b = len_ / 2;
  c.pes += len_ == 2 ? 1 : len_ / 4;
  c.registers += 5LL * b;
  c.mu_v += static_cast<long long>(rows_) * b;
  if (len_ > 2) {
    c.muxes += b;
    c.mux_depth += 1;
  }
  return c;
}

void BpUnit::randomize(Rng& rng) {
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  for (auto* a : {&e1a0_, &a0e1_, &u_in_, &u_out_, &v_out_})
    for (double& v : *a) v = d(rng);
  if (child_) child_->randomize(rng);
}

}  // namespace polar::hwsim::detail
