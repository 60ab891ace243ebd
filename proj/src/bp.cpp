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

#include "polar/bp.hpp"

#include <algorithm>
#include <cmath>

#include "polar/error.hpp"
#include "polar/sc.hpp"

namespace polar {

namespace {
constexpr double kClip = 40.0;

double clip(double a) {
  if (std::isinf(a)) return a;
  return std::clamp(a, -kClip, kClip);
}

double prior(const CodeSpec& spec, int i) {
  if (!spec.is_frozen(i)) return 0.0;
  return spec.frozen_value(i) ? -kInf : kInf;
}
}  // namespace

const char* bp_msg_name(BpMsg m) {
  switch (m) {
    case BpMsg::kE1A0: return "e1_a0";
    case BpMsg::kA0E1: return "a0_e1";
    case BpMsg::kUOut: return "u_out";
    case BpMsg::kVOut: return "v_out";
    case BpMsg::kX0Out: return "x0_out";
    case BpMsg::kX1Out: return "x1_out";
  }
  return "?";
}

double bp_fplus(double a, double b) { return f_plus(clip(a), clip(b)); }

double bp_butterfly_update(ButterflyMessages& m, BpMsg which, bool* contradiction) {
  bool bad = false;
  double r = 0.0;
  switch (which) {
    case BpMsg::kE1A0: r = m.e1_a0 = f_equal_checked(m.v_in, m.x1_in, &bad); break;
    case BpMsg::kA0E1: r = m.a0_e1 = bp_fplus(m.u_in, m.x0_in); break;
    case BpMsg::kUOut: r = m.u_out = bp_fplus(m.x0_in, m.e1_a0); break;
    case BpMsg::kVOut: r = m.v_out = f_equal_checked(m.a0_e1, m.x1_in, &bad); break;
    case BpMsg::kX0Out: r = m.x0_out = bp_fplus(m.e1_a0, m.u_in); break;
    case BpMsg::kX1Out: r = m.x1_out = f_equal_checked(m.a0_e1, m.v_in, &bad); break;
  }
  if (bad) {
    if (!contradiction) throw ContradictionError("conflicting certain messages");
    *contradiction = true;
  }
  return r;
}

long long MessageCounts::total(BpMsg m) const {
  long long t = 0;
  for (const auto& l : by_level) t += l[static_cast<int>(m)];
  return t;
}

BpState::BpState(const CodeSpec& spec) : n(spec.n_total()) {
  if (!is_arikan(spec.kernel())) throw UnsupportedError("BP needs the Arikan kernel");
  levels = spec.m();
  level.assign(levels, std::vector<ButterflyMessages>(n / 2));
}

void BpState::clear_transient() {
  for (auto& lv : level)
    for (auto& m : lv) {
      double v = m.v_in;
      m = ButterflyMessages{};
      m.v_in = v;
    }
}

std::vector<double> BpState::all_values() const {
  std::vector<double> out;
  for (const auto& lv : level)
    for (const auto& m : lv)
      for (double v : {m.u_in, m.v_in, m.x0_in, m.x1_in, m.u_out, m.v_out, m.x0_out, m.x1_out,
                       m.e1_a0, m.a0_e1})
        out.push_back(v);
  return out;
}

namespace {

struct IterCtx {
  const CodeSpec& spec;
  BpState& st;
  MessageCounts* counts;
  BpIterationResult& res;
};

void upd(IterCtx& c, int k, ButterflyMessages& m, BpMsg which) {
  bp_butterfly_update(m, which, &c.res.contradiction);
  if (c.counts) ++c.counts->by_level[k][static_cast<int>(which)];
}

void check_frozen(IterCtx& c, int idx, double est) {
  if (!c.spec.is_frozen(idx)) return;
  bool ok = c.spec.frozen_value(idx) ? est < 0 : est > 0;
  if (!ok) c.res.frozen_consistent = false;
}

void iter_rec(IterCtx& c, int k, int id, const double* x_in, double* x_out) {
  const int len = c.st.n >> k;
  const int b = len / 2;
  auto m = [&](int i) -> ButterflyMessages& { return c.st.at(k, id, i); };
  for (int i = 0; i < b; ++i) {
    m(i).x0_in = x_in[2 * i];
    m(i).x1_in = x_in[2 * i + 1];
  }
  if (len == 2) {
    ButterflyMessages& bm = m(0);
    const int ui = 2 * id, vi = 2 * id + 1;
    bm.u_in = prior(c.spec, ui);
    bm.v_in = prior(c.spec, vi);
    upd(c, k, bm, BpMsg::kE1A0);
    upd(c, k, bm, BpMsg::kUOut);
    c.res.u_hat[ui] = c.spec.is_frozen(ui) ? c.spec.frozen_value(ui) : decide_binary(bm.u_out);
    check_frozen(c, ui, bm.u_out);
    upd(c, k, bm, BpMsg::kA0E1);
    upd(c, k, bm, BpMsg::kVOut);
    c.res.u_hat[vi] = c.spec.is_frozen(vi) ? c.spec.frozen_value(vi) : decide_binary(bm.v_out);
    check_frozen(c, vi, bm.v_out);
    upd(c, k, bm, BpMsg::kX0Out);
    upd(c, k, bm, BpMsg::kX1Out);
    x_out[0] = bm.x0_out;
    x_out[1] = bm.x1_out;
    return;
  }
  std::vector<double> child_in(b), child_out(b);
  // STEP I
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kE1A0);
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kUOut);
  // STEP II
  for (int i = 0; i < b; ++i) child_in[i] = m(i).u_out;
  iter_rec(c, k + 1, 2 * id, child_in.data(), child_out.data());
  for (int i = 0; i < b; ++i) m(i).u_in = child_out[i];
  // STEP III
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kA0E1);
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kVOut);
  // STEP IV
  for (int i = 0; i < b; ++i) child_in[i] = m(i).v_out;
  iter_rec(c, k + 1, 2 * id + 1, child_in.data(), child_out.data());
  for (int i = 0; i < b; ++i) m(i).v_in = child_out[i];
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kE1A0);
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kX0Out);
  for (int i = 0; i < b; ++i) upd(c, k, m(i), BpMsg::kX1Out);
  for (int i = 0; i < b; ++i) {
    x_out[2 * i] = m(i).x0_out;
    x_out[2 * i + 1] = m(i).x1_out;
  }
}

}  // namespace

BpIterationResult bp_iteration(const CodeSpec& spec, BpState& state, const std::vector<double>& llrs,
                               MessageCounts* counts) {
  if (!is_arikan(spec.kernel())) throw UnsupportedError("BP needs the Arikan kernel");
  if (static_cast<int>(llrs.size()) != spec.n_total()) throw ShapeError("llr vector has wrong length");
  if (state.n != spec.n_total()) throw ShapeError("state does not match the code");
  BpIterationResult res;
  res.u_hat.assign(spec.n_total(), 0);
  res.frozen_consistent = true;
  if (counts) counts->by_level.assign(state.levels, {});
  IterCtx c{spec, state, counts, res};
  std::vector<double> out(spec.n_total());
  iter_rec(c, 0, 0, llrs.data(), out.data());
  ++state.iterations;
  return res;
}

BpResult bp_decode(const CodeSpec& spec, const std::vector<double>& llrs, int max_iters,
                   StopRule stop) {
  BpOptions opt;
  opt.stop = stop;
  return bp_decode(spec, llrs, max_iters, opt);
}

BpResult bp_decode(const CodeSpec& spec, const std::vector<double>& llrs, int max_iters,
                   const BpOptions& opt) {
  if (max_iters < 1) throw ParameterError("max_iters must be at least 1");
  BpState st(spec);
  BpResult r;
  SymbolVec prev;
  for (int it = 0; it < max_iters; ++it) {
    if (it > 0 && opt.clear_transient) st.clear_transient();
    BpIterationResult ir = bp_iteration(spec, st, llrs);
    r.iterations = it + 1;
    r.contradiction = r.contradiction || ir.contradiction;
    bool unchanged = it > 0 && ir.u_hat == prev;
    prev = ir.u_hat;
    r.u_hat = ir.u_hat;
    r.converged = ir.frozen_consistent || unchanged;
    if (ir.contradiction) break;
    bool stop_now = false;
    switch (opt.stop) {
      case StopRule::kNone: break;
      case StopRule::kFrozenConsistency: stop_now = ir.frozen_consistent; break;
      case StopRule::kUnchanged: stop_now = unchanged; break;
      case StopRule::kEither: stop_now = ir.frozen_consistent || unchanged; break;
    }
    if (stop_now) break;
  }
  r.x_hat.assign(spec.n_total(), 0);
  encode_raw(spec.kernel(), spec.n_total(), r.u_hat.data(), r.x_hat.data());
  return r;
}

}  // namespace polar
