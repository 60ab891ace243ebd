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

#include "polar/hwsim.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "polar/bp.hpp"
#include "polar/error.hpp"
#include "units.hpp"

namespace polar::hwsim {

using detail::BpUnit;
using detail::Counts;
using detail::GeneralUnit;
using detail::LineUnit;
using detail::PipelineUnit;
using detail::ScUnit;
using detail::SimContext;

namespace {

struct ArchNameEntry {
  Arch arch;
  const char* name;
};

constexpr ArchNameEntry kArchNames[] = {
    {Arch::kScPipeline, "sc-pipeline"},   {Arch::kScLine, "sc-line"},
    {Arch::kScLineLimited, "sc-line-limited"}, {Arch::kScLineMulti, "sc-line-multi"},
    {Arch::kBpLine, "bp-line"},           {Arch::kBpLineFused, "bp-line-fused"},
    {Arch::kGeneralLine, "general-line"},
};

int log_base(long long n, int b) {
  int e = 0;
  while (n > 1) {
    if (n % b) return -1;
    n /= b;
    ++e;
  }
  return n == 1 ? e : -1;
}

int bitrev(int v, int bits) {
  int r = 0;
  for (int i = 0; i < bits; ++i) r |= ((v >> i) & 1) << (bits - 1 - i);
  return r;
}

// Flip-flop bank holding the running partial encoding of the decided bits.
struct EncodingBank {
  int bits;
  SymbolVec x;
  EncodingBank(int n, int b) : bits(b), x(n, 0) {}
  void decide(int k, Symbol bit) {
    if (!bit) return;
    for (int s = k;; s = (s - 1) & k) {
      x[bitrev(s, bits)] ^= 1;
      if (s == 0) break;
    }
  }
};

void require_arikan(const CodeSpec& spec, int n) {
  if (!is_arikan(spec.kernel())) throw ContractError("architecture needs the Arikan kernel");
  if (spec.n_total() != n) throw ContractError("code length does not match the architecture");
}

}  // namespace

std::string arch_name(Arch a) {
  for (const auto& e : kArchNames)
    if (e.arch == a) return e.name;
  return "?";
}

Arch parse_arch(const std::string& name) {
  for (const auto& e : kArchNames)
    if (name == e.name) return e.arch;
  throw ParseError("unknown architecture: " + name);
}

std::string CycleReport::to_text() const {
  std::ostringstream os;
  os << "cycles=" << cycles << "\n"
     << "pe_count=" << pe_count << "\n"
     << "llr_registers=" << llr_registers << "\n"
     << "mux_count=" << mux_count << "\n";
  int peak = 0;
  for (int v : pe_busy_histogram) peak = std::max(peak, v);
  os << "pe_busy_peak=" << peak << "\n";
  os << "pe_busy_histogram=";
  for (size_t i = 0; i < pe_busy_histogram.size(); ++i) os << (i ? "," : "") << pe_busy_histogram[i];
  os << "\n";
  for (const auto& [k, v] : extensions) os << k << "=" << v << "\n";
  return os.str();
}

struct SimDecoder::Impl {
  ArchConfig cfg;
  int bits = 0;
  SimContext ctx;
  std::unique_ptr<ScUnit> sc;
  std::vector<std::unique_ptr<LineUnit>> multi;
  std::vector<int> shared_aux;
  std::unique_ptr<BpUnit> bp;
  std::unique_ptr<GeneralUnit> gen;

  explicit Impl(const ArchConfig& c) : cfg(c), ctx(c.pe_latency) {}

  CycleReport report(long long cycles) const {
    Structure s = audit();
    CycleReport r;
    r.cycles = cycles;
    r.pe_count = s.pe_count;
    r.llr_registers = s.llr_registers;
    r.mux_count = s.mux_count;
    r.pe_busy_histogram = ctx.histogram();
    r.pe_busy_histogram.resize(cycles, 0);
    r.extensions["hazards"] = ctx.hazards();
    r.extensions["contention"] = ctx.contention();
    r.extensions["longest_mux_path"] = s.longest_mux_path;
    r.extensions["pe_latency"] = cfg.pe_latency;
    return r;
  }

  Structure audit() const {
    Counts c;
    if (sc) c = sc->counts();
    if (bp) c = bp->counts();
    if (gen) c = gen->counts();
    for (const auto& u : multi) {
      Counts d = u->counts();
      c.pes += d.pes;
      c.registers += d.registers;
      c.muxes += d.muxes;
      c.mux_depth = d.mux_depth;
    }
    c.pes += static_cast<long long>(shared_aux.size());
    Structure s;
    s.pe_count = c.pes;
    s.llr_registers = c.registers;
    s.mux_count = c.muxes;
    s.mu_v_cells = c.mu_v;
    s.longest_mux_path = c.mux_depth;
    return s;
  }

  ScUnit* sc_probe_unit() {
    if (sc) return sc.get();
    if (!multi.empty()) return multi[0].get();
    throw ContractError("architecture has no SC P-Mode");
  }
};

SimDecoder::SimDecoder(const ArchConfig& config) {
  const ArchConfig& c = config;
  if (c.pe_latency < 1) throw BuildError("pe_latency must be at least 1");
  if (c.arch == Arch::kBpLineFused) throw BuildError("fused BP processing elements are not supported");
  int bits;
  if (c.arch == Arch::kGeneralLine) {
    if (c.ell < 2) throw BuildError("kernel dimension must be at least 2");
    bits = log_base(c.n, c.ell);
    if (c.n < c.ell || bits < 1) throw BuildError("N must be a power of the kernel dimension");
  } else {
    bits = log_base(c.n, 2);
    if (c.n < 2 || bits < 1) throw BuildError("N must be a power of 2, at least 2");
  }
  if (c.arch == Arch::kScLineLimited && (c.limit < 1 || c.limit > bits))
    throw BuildError("limited parallelism i must lie in [1, log2 N]");
  if (c.arch == Arch::kScLineMulti && (c.codewords < 1 || c.codewords > std::max(1, c.n - 1)))
    throw BuildError("codeword count p must lie in [1, N-1]");
  impl_ = std::make_unique<Impl>(c);
  Impl& m = *impl_;
  m.bits = bits;
  switch (c.arch) {
    case Arch::kScPipeline: m.sc = std::make_unique<PipelineUnit>(m.ctx, c.n); break;
    case Arch::kScLine: m.sc = std::make_unique<LineUnit>(m.ctx, c.n); break;
    case Arch::kScLineLimited: m.sc = detail::make_limited(m.ctx, c.n, c.limit); break;
    case Arch::kScLineMulti:
      if (c.n >= 4)
        for (int i = 0; i < c.n / 4; ++i) m.shared_aux.push_back(m.ctx.new_pe(true));
      for (int d = 0; d < c.codewords; ++d)
        m.multi.push_back(std::make_unique<LineUnit>(m.ctx, c.n, &m.shared_aux, d));
      break;
    case Arch::kBpLine: m.bp = std::make_unique<BpUnit>(m.ctx, c.n, 1); break;
    case Arch::kGeneralLine: m.gen = std::make_unique<GeneralUnit>(m.ctx, c.n, c.ell); break;
    case Arch::kBpLineFused: break;
  }
}

SimDecoder::~SimDecoder() = default;
SimDecoder::SimDecoder(SimDecoder&&) noexcept = default;
SimDecoder& SimDecoder::operator=(SimDecoder&&) noexcept = default;

const ArchConfig& SimDecoder::config() const { return impl_->cfg; }
Structure SimDecoder::audit() const { return impl_->audit(); }
void SimDecoder::set_trace(bool on) { impl_->ctx.set_trace(on); }

ScRun SimDecoder::run_sc(const CodeSpec& spec, const std::vector<double>& llrs) {
  Impl& m = *impl_;
  if (!m.sc) throw ContractError("run_sc needs an SC pipeline, line or limited architecture");
  require_arikan(spec, m.cfg.n);
  if (static_cast<int>(llrs.size()) != m.cfg.n) throw ShapeError("llr vector has wrong length");
  m.ctx.reset_run();
  EncodingBank bank(m.cfg.n, m.bits);
  m.ctx.on_decide = [&bank](int k, Symbol b) { bank.decide(k, b); };
  ScRun run;
  ScResult& r = run.result;
  r.u_hat.assign(m.cfg.n, 0);
  r.x_hat.assign(m.cfg.n, 0);
  m.sc->s_mode(spec, llrs.data(), 0, r.u_hat.data(), r.x_hat.data());
  m.ctx.on_decide = nullptr;
  r.raw_decisions = r.u_hat;
  r.contradiction = m.ctx.contradiction;
  run.report = m.report(m.ctx.now());
  run.report.extensions["partial_encoding_ok"] = bank.x == r.x_hat ? 1 : 0;
  run.report.trace = std::move(m.ctx.trace());
  return run;
}

MultiRun SimDecoder::run_sc_multi(const std::vector<CodeSpec>& specs,
                                  const std::vector<std::vector<double>>& llrs) {
  Impl& m = *impl_;
  if (m.multi.empty()) throw ContractError("run_sc_multi needs the multi-codeword architecture");
  const size_t p = specs.size();
  if (p < 1 || p > m.multi.size() || llrs.size() != p)
    throw ContractError("need between 1 and p codewords with matching llr batches");
  for (size_t d = 0; d < p; ++d) {
    require_arikan(specs[d], m.cfg.n);
    if (static_cast<int>(llrs[d].size()) != m.cfg.n) throw ShapeError("llr vector has wrong length");
  }
  m.ctx.reset_run();
  MultiRun run;
  long long end = 0;
  bool enc_ok = true;
  long long contradictions = 0;
  for (size_t d = 0; d < p; ++d) {
    m.ctx.set_now(static_cast<long long>(d) * m.cfg.pe_latency);
    m.ctx.contradiction = false;
    EncodingBank bank(m.cfg.n, m.bits);
    m.ctx.on_decide = [&bank](int k, Symbol b) { bank.decide(k, b); };
    ScResult r;
    r.u_hat.assign(m.cfg.n, 0);
    r.x_hat.assign(m.cfg.n, 0);
    m.multi[d]->s_mode(specs[d], llrs[d].data(), 0, r.u_hat.data(), r.x_hat.data());
    r.raw_decisions = r.u_hat;
    r.contradiction = m.ctx.contradiction;
    contradictions += r.contradiction;
    enc_ok = enc_ok && bank.x == r.x_hat;
    end = std::max(end, m.ctx.now());
    run.results.push_back(std::move(r));
  }
  m.ctx.on_decide = nullptr;
  run.report = m.report(end);
  run.report.extensions["partial_encoding_ok"] = enc_ok ? 1 : 0;
  run.report.extensions["codewords"] = static_cast<long long>(p);
  run.report.trace = std::move(m.ctx.trace());
  return run;
}

BpRun SimDecoder::run_bp_line(const CodeSpec& spec, const std::vector<double>& llrs, int iterations) {
  Impl& m = *impl_;
  if (!m.bp) throw ContractError("run_bp_line needs the BP line architecture");
  require_arikan(spec, m.cfg.n);
  if (static_cast<int>(llrs.size()) != m.cfg.n) throw ShapeError("llr vector has wrong length");
  if (iterations < 1) throw ParameterError("iterations must be at least 1");
  m.ctx.reset_run();
  m.bp->init_memory(spec);
  BpRun run;
  std::vector<double> x_out(m.cfg.n);
  int done = 0;
  for (int it = 0; it < iterations; ++it) {
    run.u_hat.assign(m.cfg.n, 0);
    m.bp->s_mode(spec, 0, llrs.data(), x_out.data(), run.u_hat.data());
    ++done;
    if (m.ctx.contradiction) break;
  }
  const long long cycles = m.ctx.now();
  run.report = m.report(cycles);
  run.report.extensions["iterations"] = done;
  run.report.extensions["per_iteration_cycles"] = cycles / done;
  run.report.extensions["mu_v_cells"] = m.audit().mu_v_cells;
  run.report.extensions["contradiction"] = m.ctx.contradiction ? 1 : 0;
  run.report.trace = std::move(m.ctx.trace());
  return run;
}

ScRun SimDecoder::run_general_line(const CodeSpec& spec, const std::vector<LlrFunction>& llrs) {
  Impl& m = *impl_;
  if (!m.gen) throw ContractError("run_general_line needs the general line architecture");
  if (spec.ell() != m.cfg.ell || spec.n_total() != m.cfg.n)
    throw ContractError("code does not match the architecture");
  if (!spec.kernel().is_linear() || !spec.kernel().homogeneous())
    throw UnsupportedError("the general line decoder needs a linear kernel without glued inputs");
  const int n = m.cfg.n, q = spec.q();
  if (static_cast<int>(llrs.size()) != n) throw ShapeError("llr vector has wrong length");
  std::vector<double> lam(static_cast<size_t>(n) * q);
  for (int i = 0; i < n; ++i) {
    if (llrs[i].q() != q) throw ShapeError("llr function has wrong alphabet size");
    std::copy(llrs[i].values.begin(), llrs[i].values.end(), lam.begin() + static_cast<size_t>(i) * q);
  }
  m.ctx.reset_run();
  m.gen->bind(&spec.kernel());
  ScRun run;
  ScResult& r = run.result;
  r.u_hat.assign(n, 0);
  r.x_hat.assign(n, 0);
  m.gen->s_mode(spec, lam.data(), 0, r.u_hat.data(), r.x_hat.data());
  r.raw_decisions = r.u_hat;
  r.contradiction = m.ctx.contradiction;
  run.report = m.report(m.ctx.now());
  SymbolVec x(n);
  encode_raw(spec.kernel(), n, r.u_hat.data(), x.data());
  run.report.extensions["partial_encoding_ok"] = x == r.x_hat ? 1 : 0;
  run.report.trace = std::move(m.ctx.trace());
  return run;
}

std::vector<double> SimDecoder::p_mode(const std::vector<double>& lam, int c_u, const SymbolVec& z) {
  Impl& m = *impl_;
  ScUnit* u = m.sc_probe_unit();
  const int n = m.cfg.n;
  if (static_cast<int>(lam.size()) != n) throw ShapeError("P-Mode needs N input llrs");
  if (c_u != 0 && c_u != 1) throw ParameterError("c_u must be 0 or 1");
  if (c_u == 1 && static_cast<int>(z.size()) != n / 2) throw ShapeError("P-Mode needs N/2 estimates");
  m.ctx.reset_run();
  std::vector<double> out(n / 2);
  u->p_mode(lam.data(), c_u, c_u ? z.data() : nullptr, out.data());
  return out;
}

std::vector<double> SimDecoder::bp_p_mode(int op, const std::vector<double>& a,
                                          const std::vector<double>& b) {
  Impl& m = *impl_;
  if (!m.bp) throw ContractError("architecture has no BP P-Mode");
  if (op < 0 || op >= kBpMsgKinds) throw ParameterError("unknown BP message rule");
  const int half = m.cfg.n / 2;
  if (static_cast<int>(a.size()) != half || static_cast<int>(b.size()) != half)
    throw ShapeError("BP P-Mode needs N/2 input pairs");
  m.ctx.reset_run();
  std::vector<double> out(half);
  m.bp->issue_p(static_cast<BpMsg>(op), a.data(), b.data(), out.data());
  m.ctx.end_step();
  return out;
}

std::vector<LlrFunction> SimDecoder::general_p_mode(const CodeSpec& spec,
                                                    const std::vector<LlrFunction>& lam, int c_u,
                                                    const SymbolVec& coset) {
  Impl& m = *impl_;
  if (!m.gen) throw ContractError("architecture has no general P-Mode");
  if (spec.ell() != m.cfg.ell || spec.n_total() != m.cfg.n)
    throw ContractError("code does not match the architecture");
  if (!spec.kernel().is_linear()) throw UnsupportedError("the general line decoder needs a linear kernel");
  const int n = m.cfg.n, q = spec.q(), ell = m.cfg.ell;
  if (static_cast<int>(lam.size()) != n || static_cast<int>(coset.size()) != n)
    throw ShapeError("P-Mode needs N llr functions and N coset symbols");
  if (c_u < 0 || c_u >= ell) throw ParameterError("stage index out of range");
  std::vector<double> flat(static_cast<size_t>(n) * q);
  for (int i = 0; i < n; ++i) {
    if (lam[i].q() != q) throw ShapeError("llr function has wrong alphabet size");
    std::copy(lam[i].values.begin(), lam[i].values.end(), flat.begin() + static_cast<size_t>(i) * q);
  }
  m.ctx.reset_run();
  m.gen->bind(&spec.kernel());
  std::vector<double> out(static_cast<size_t>(n / ell) * q);
  bool bad = false;
  m.gen->issue_p(flat.data(), c_u, coset.data(), out.data(), &bad);
  m.ctx.end_step();
  std::vector<LlrFunction> res;
  for (int j = 0; j < n / ell; ++j)
    res.emplace_back(std::vector<double>(out.begin() + j * q, out.begin() + (j + 1) * q));
  return res;
}

void SimDecoder::randomize_state(std::uint64_t seed) {
  Impl& m = *impl_;
  detail::Rng rng(seed);
  if (m.sc) m.sc->randomize(rng);
  for (auto& u : m.multi) u->randomize(rng);
  if (m.bp) m.bp->randomize(rng);
  if (m.gen) m.gen->randomize(rng);
}

namespace formulas {
long long pipeline_cycles(long long n) { return 2 * n - 2; }
long long pipeline_pes(long long n) { return n - 1; }
long long pipeline_registers(long long n) { return 2 * n - 2; }
long long line_cycles(long long n) { return 2 * n - 2; }
long long line_pes(long long n) { return n / 2; }
long long line_registers(long long n) { return n - 1; }
long long line_muxes(long long n) { return n - 2; }
long long limited_cycles(long long n, int i) { return 2 * n + (i - 2) * (1LL << i); }
long long limited_pes(long long n, int i) { return n >> i; }
long long multi_cycles(long long n, long long p) { return line_cycles(n) + p - 1; }
long long multi_pes(long long n, long long p) { return n == 2 ? p : p * (n / 4) + n / 4; }
long long bp_line_iteration_cycles(long long n) { return (11 * n - 14) / 2; }
long long bp_line_pes(long long n) { return n / 2; }
long long bp_line_mu_v_cells(long long n) { return log_base(n, 2) * n / 2; }
long long general_line_cycles(long long n, int ell, int c) {
  return c * (n + ell * (log_base(n, ell) - 1));
}
long long general_line_recursion(long long n, int ell, int c) { return c * ell * (n - 1) / (ell - 1); }
long long general_line_pes(long long n, int ell) { return n / ell; }
long long general_line_registers(long long n, int ell) { return (n - ell) / (ell - 1); }
}  // namespace formulas

namespace {

KernelPtr general_kernel(int ell) {
  if (ell == 2) return Kernel::arikan();
  if (ell == 4) return Kernel::triangular4();
  Matrix g(ell, SymbolVec(ell, 0));
  for (int i = 0; i < ell; ++i)
    for (int j = i; j < ell; ++j) g[i][j] = 1;
  return Kernel::linear(g, Alphabet::make(2));
}

CodeSpec random_spec(KernelPtr k, int m, std::mt19937_64& rng) {
  CodeSpec spec(std::move(k), m);
  std::bernoulli_distribution half(0.5);
  for (int i = 0; i < spec.n_total(); ++i)
    if (half(rng)) spec.freeze(i, 0);
  return spec;
}

std::vector<double> random_llrs(const CodeSpec& spec, std::mt19937_64& rng) {
  const int n = spec.n_total();
  std::bernoulli_distribution coin(0.5);
  SymbolVec u(n);
  for (int i = 0; i < n; ++i) u[i] = spec.is_frozen(i) ? spec.frozen_value(i) : coin(rng);
  SymbolVec x = encode(spec, u);
  std::normal_distribution<double> noise(0.0, 0.8);
  std::vector<double> l(n);
  for (int i = 0; i < n; ++i) l[i] = 2.0 * ((x[i] ? -1.0 : 1.0) + noise(rng)) / 0.64;
  return l;
}

bool busy_within(const CycleReport& r) {
  return std::all_of(r.pe_busy_histogram.begin(), r.pe_busy_histogram.end(),
                     [&](int v) { return v <= r.pe_count; });
}

}  // namespace

SampleRun sample_run(const ArchConfig& config, std::uint64_t seed, bool trace, int bp_iterations) {
  SimDecoder sim(config);
  sim.set_trace(trace);
  std::mt19937_64 rng(seed);
  const int m2 = log_base(config.n, 2);
  SampleRun out;
  switch (config.arch) {
    case Arch::kScPipeline:
    case Arch::kScLine:
    case Arch::kScLineLimited: {
      CodeSpec spec = random_spec(Kernel::arikan(), m2, rng);
      auto llrs = random_llrs(spec, rng);
      ScRun run = sim.run_sc(spec, llrs);
      ScResult sw = decode_sc_arikan(spec, llrs);
      out.bit_exact = run.result.u_hat == sw.u_hat && run.result.x_hat == sw.x_hat;
      out.report = std::move(run.report);
      break;
    }
    case Arch::kScLineMulti: {
      std::vector<CodeSpec> specs;
      std::vector<std::vector<double>> llrs;
      for (int d = 0; d < config.codewords; ++d) {
        specs.push_back(random_spec(Kernel::arikan(), m2, rng));
        llrs.push_back(random_llrs(specs.back(), rng));
      }
      MultiRun run = sim.run_sc_multi(specs, llrs);
      out.bit_exact = true;
      for (size_t d = 0; d < specs.size(); ++d) {
        ScResult sw = decode_sc_arikan(specs[d], llrs[d]);
        out.bit_exact = out.bit_exact && sw.u_hat == run.results[d].u_hat &&
                        sw.x_hat == run.results[d].x_hat;
      }
      out.report = std::move(run.report);
      break;
    }
    case Arch::kBpLine: {
      CodeSpec spec = random_spec(Kernel::arikan(), m2, rng);
      auto llrs = random_llrs(spec, rng);
      BpRun run = sim.run_bp_line(spec, llrs, bp_iterations);
      BpResult sw = bp_decode(spec, llrs, bp_iterations, StopRule::kNone);
      out.bit_exact = run.u_hat == sw.u_hat;
      out.report = std::move(run.report);
      break;
    }
    case Arch::kGeneralLine: {
      CodeSpec spec = random_spec(general_kernel(config.ell), log_base(config.n, config.ell), rng);
      std::vector<LlrFunction> llrs;
      for (double v : random_llrs(spec, rng)) llrs.push_back(LlrFunction::binary(v));
      ScRun run = sim.run_general_line(spec, llrs);
      ScResult sw = decode_sc_general(spec, llrs);
      out.bit_exact = run.result.u_hat == sw.u_hat && run.result.x_hat == sw.x_hat;
      out.report = std::move(run.report);
      break;
    }
    case Arch::kBpLineFused: break;
  }
  const Structure s = sim.audit();
  out.report.extensions["bit_exact"] = out.bit_exact ? 1 : 0;
  if (config.arch == Arch::kBpLine) out.report.extensions["mu_v_cells"] = s.mu_v_cells;
  return out;
}

std::vector<FormulaCheck> check_formulas(const ArchConfig& config, std::uint64_t seed) {
  const SampleRun sr = sample_run(config, seed);
  const CycleReport& r = sr.report;
  const long long n = config.n;
  const long long c = config.pe_latency;
  const int ci = config.pe_latency;
  std::vector<FormulaCheck> out;
  auto add = [&out](std::string name, long long expected, long long actual) {
    out.push_back({std::move(name), expected, actual});
  };
  auto ext = [&r](const char* key) { return r.extensions.at(key); };
  switch (config.arch) {
    case Arch::kScPipeline:
      add("cycles", c * formulas::pipeline_cycles(n), r.cycles);
      add("pe_count", formulas::pipeline_pes(n), r.pe_count);
      add("llr_registers", formulas::pipeline_registers(n), r.llr_registers);
      break;
    case Arch::kScLine:
      add("cycles", c * formulas::line_cycles(n), r.cycles);
      add("pe_count", formulas::line_pes(n), r.pe_count);
      add("llr_registers", formulas::line_registers(n), r.llr_registers);
      add("mux_count", formulas::line_muxes(n), r.mux_count);
      break;
    case Arch::kScLineLimited:
      add("cycles", c * formulas::limited_cycles(n, config.limit), r.cycles);
      add("pe_count", formulas::limited_pes(n, config.limit), r.pe_count);
      break;
    case Arch::kScLineMulti:
      add("cycles", c * formulas::multi_cycles(n, config.codewords), r.cycles);
      add("pe_count", formulas::multi_pes(n, config.codewords), r.pe_count);
      add("contention", 0, ext("contention"));
      break;
    case Arch::kBpLine:
      add("per_iteration_cycles", c * formulas::bp_line_iteration_cycles(n), ext("per_iteration_cycles"));
      add("pe_count", formulas::bp_line_pes(n), r.pe_count);
      add("mu_v_cells", formulas::bp_line_mu_v_cells(n), ext("mu_v_cells"));
      break;
    case Arch::kGeneralLine:
      add("cycles", formulas::general_line_cycles(n, config.ell, ci), r.cycles);
      add("cycles_recursion", formulas::general_line_recursion(n, config.ell, ci), r.cycles);
      add("pe_count", formulas::general_line_pes(n, config.ell), r.pe_count);
      add("llr_registers", formulas::general_line_registers(n, config.ell), r.llr_registers);
      break;
    case Arch::kBpLineFused: break;
  }
  add("bit_exact", 1, sr.bit_exact ? 1 : 0);
  if (r.extensions.count("partial_encoding_ok")) add("partial_encoding", 1, ext("partial_encoding_ok"));
  add("hazards", 0, ext("hazards"));
  add("busy_within_pe_count", 1, busy_within(r) ? 1 : 0);
  return out;
}

bool encoding_indicator(int n_bits, int j, int k) { return (bitrev(j, n_bits) & ~k) == 0; }

}  // namespace polar::hwsim
