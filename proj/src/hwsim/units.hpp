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

#ifndef POLAR_SRC_HWSIM_UNITS_HPP_
#define POLAR_SRC_HWSIM_UNITS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "polar/bp.hpp"
#include "polar/code_spec.hpp"
#include "polar/llr.hpp"

namespace polar::hwsim::detail {

using Rng = std::mt19937_64;

// Clock, PE registry and activity bookkeeping shared by all units of one
// decoder. A step is a window of pe_latency cycles in which a set of PEs is
// activated once each.
class SimContext {
 public:
  explicit SimContext(int latency) : latency_(latency) {}

  int new_pe(bool shared = false);
  int pe_total() const { return static_cast<int>(pe_last_.size()); }
  int latency() const { return latency_; }

  void reset_run();
  long long now() const { return now_; }
  void set_now(long long t) { now_ = t; }
  void activate(int pe);
  void end_step();
  // Books a shared PE array for the current step on behalf of owner.
  void book_shared(int array_id, int owner);

  bool tracing() const { return trace_on_; }
  void set_trace(bool on) { trace_on_ = on; }
  void log(const std::string& unit, const std::string& op, const std::string& in,
           const std::string& out);

  long long hazards() const { return hazards_; }
  long long contention() const { return contention_; }
  const std::vector<int>& histogram() const { return hist_; }
  std::vector<std::string>& trace() { return trace_; }

  // Called by SC base units on every decision with the global input index.
  std::function<void(int, Symbol)> on_decide;
  bool contradiction = false;

 private:
  int latency_;
  long long now_ = 0;
  int pending_ = 0;
  std::vector<long long> pe_last_;
  std::vector<char> pe_shared_;
  std::vector<int> hist_;
  std::map<std::pair<int, long long>, int> bookings_;
  long long hazards_ = 0;
  long long contention_ = 0;
  bool trace_on_ = false;
  std::vector<std::string> trace_;
};

std::string fmt_llr(double v);

struct Counts {
  long long pes = 0, registers = 0, muxes = 0, mu_v = 0;
  int mux_depth = 0;
};

// ---------------------------------------------------------------- SC units

class ScUnit {
 public:
  virtual ~ScUnit() = default;
  int length() const { return len_; }
  // Standard mode: decodes the length-L code whose first input has global
  // index off. lam holds L channel-domain llrs.
  virtual void s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) = 0;
  // PE-array mode, including the clock advance: L/2 outputs.
  virtual void p_mode(const double* lam, int c_u, const Symbol* z, double* out) = 0;
  virtual Counts counts() const = 0;
  virtual void randomize(Rng& rng) = 0;

 protected:
  ScUnit(SimContext& ctx, int len) : ctx_(ctx), len_(len) {}
  SimContext& ctx_;
  int len_;
};

// One SC PE activation: f_plus (c_u = 0) or f_equal given estimate z.
// Contradictions are reported through flag when it is non-null.
double sc_pe(SimContext& ctx, int pe, const std::string& unit, double a, double b, int c_u, Symbol z,
             bool* flag);

class PipelineUnit : public ScUnit {
 public:
  PipelineUnit(SimContext& ctx, int len);
  // The pipeline reads its own lambda registers; lam is copied into them.
  void s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) override;
  void p_mode(const double* lam, int c_u, const Symbol* z, double* out) override;
  Counts counts() const override;
  void randomize(Rng& rng) override;

 private:
  void run(const CodeSpec& spec, int off, Symbol* u, Symbol* x);
  std::vector<double> lam_;
  std::vector<int> pes_;
  std::unique_ptr<PipelineUnit> child_;
  std::string name_;
};

class LineUnit : public ScUnit {
 public:
  // shared_aux: PE ids of a top-level auxiliary array shared with other
  // decoders (multi-codeword); owner identifies this decoder.
  LineUnit(SimContext& ctx, int len, const std::vector<int>* shared_aux = nullptr, int owner = 0);
  void s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) override;
  void p_mode(const double* lam, int c_u, const Symbol* z, double* out) override;
  // Activates the PEs of one P-Mode step without advancing the clock.
  void issue_p(const double* lam, int c_u, const Symbol* z, double* out);
  Counts counts() const override;
  void randomize(Rng& rng) override;

 private:
  void aux_step(const double* lam, int c_u, const Symbol* z, double* out);
  std::vector<double> r_;
  std::vector<int> aux_;
  bool aux_shared_ = false;
  int owner_ = 0;
  int base_pe_ = -1;
  std::unique_ptr<LineUnit> child_;
  std::string name_;
};

class LimitedUnit : public ScUnit {
 public:
  LimitedUnit(SimContext& ctx, int len, int limit);
  void s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x) override;
  void p_mode(const double* lam, int c_u, const Symbol* z, double* out) override;
  Counts counts() const override;
  void randomize(Rng& rng) override;

 private:
  std::vector<double> r_;
  std::unique_ptr<ScUnit> child_;
};

std::unique_ptr<ScUnit> make_limited(SimContext& ctx, int len, int limit);

// ---------------------------------------------------------------- BP line

class BpUnit {
 public:
  BpUnit(SimContext& ctx, int len, int realizations);
  // One S-Mode pass over realization rid. x_in/x_out interleave x0, x1.
  void s_mode(const CodeSpec& spec, int rid, const double* x_in, double* x_out, Symbol* u_hat);
  // PE-array mode for L/2 pairs, without advancing the clock.
  void issue_p(BpMsg op, const double* a, const double* b, double* out);
  // Clears the stored v messages; the base level loads the frozen priors.
  void init_memory(const CodeSpec& spec);
  int length() const { return len_; }
  Counts counts() const;
  void randomize(Rng& rng);

 private:
  SimContext& ctx_;
  int len_;
  int rows_;
  std::vector<double> mem_v_;  // rows_ x len_/2, persists across iterations
  std::vector<double> e1a0_, a0e1_, u_in_, u_out_, v_out_;
  std::vector<int> aux_;
  int base_pe_ = -1;
  std::unique_ptr<BpUnit> child_;
  std::string name_;
};

double bp_pe(SimContext& ctx, int pe, const std::string& unit, BpMsg op, double a, double b);

// -------------------------------------------------------- general line

class GeneralUnit {
 public:
  GeneralUnit(SimContext& ctx, int len, int ell);
  void bind(const Kernel* k);
  // lam holds L llr functions of q values each.
  void s_mode(const CodeSpec& spec, const double* lam, int off, Symbol* u, Symbol* x);
  // Stage c_u marginals for L/ell columns, without advancing the clock.
  void issue_p(const double* lam, int c_u, const Symbol* coset, double* out, bool* flag);
  int length() const { return len_; }
  Counts counts() const;
  void randomize(Rng& rng);

 private:
  void pe_marginal(int pe, const double* lam, int r, const Symbol* coset, double* out, bool* flag);
  SimContext& ctx_;
  int len_, ell_;
  int q_ = 2;
  const Kernel* kernel_ = nullptr;
  std::vector<double> r_;     // len/ell llr functions of q values
  std::vector<Symbol> coset_;  // len symbols
  std::vector<int> aux_;
  int base_pe_ = -1;
  std::unique_ptr<GeneralUnit> child_;
  std::string name_;
};

}  // namespace polar::hwsim::detail

#endif  // POLAR_SRC_HWSIM_UNITS_HPP_
