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

#ifndef POLAR_HWSIM_HPP_
#define POLAR_HWSIM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polar/code_spec.hpp"
#include "polar/llr.hpp"
#include "polar/sc.hpp"

namespace polar::hwsim {

enum class Arch {
  kScPipeline,
  kScLine,
  kScLineLimited,
  kScLineMulti,
  kBpLine,
  kBpLineFused,  // PE fusion variants; accepted by the parser, rejected at build
  kGeneralLine,
};

std::string arch_name(Arch a);
Arch parse_arch(const std::string& name);

struct ArchConfig {
  Arch arch = Arch::kScLine;
  int n = 8;           // code length
  int pe_latency = 1;  // clock cycles per PE activation
  int limit = 1;       // limited parallelism: N / 2^limit PEs
  int codewords = 1;   // multi-codeword decoders sharing the top auxiliary array
  int ell = 2;         // general line: kernel dimension
  int fused_addend = 7;
};

struct Structure {
  long long pe_count = 0;
  long long llr_registers = 0;
  long long mux_count = 0;
  long long mu_v_cells = 0;  // BP line only
  int longest_mux_path = 0;  // mux layers between an input llr and its PE in P-Mode
};

struct CycleReport {
  long long cycles = 0;
  long long pe_count = 0;
  long long llr_registers = 0;
  long long mux_count = 0;
  std::vector<int> pe_busy_histogram;
  std::map<std::string, long long> extensions;
  std::vector<std::string> trace;  // cycle,unit,op,inputs,outputs

  std::string to_text() const;
};

struct ScRun {
  ScResult result;
  CycleReport report;
};

struct MultiRun {
  std::vector<ScResult> results;
  CycleReport report;
};

struct BpRun {
  SymbolVec u_hat;
  CycleReport report;
};

class SimDecoder {
 public:
  // Throws BuildError on an invalid configuration.
  explicit SimDecoder(const ArchConfig& config);
  ~SimDecoder();
  SimDecoder(SimDecoder&&) noexcept;
  SimDecoder& operator=(SimDecoder&&) noexcept;

  const ArchConfig& config() const;
  Structure audit() const;
  void set_trace(bool on);

  ScRun run_sc(const CodeSpec& spec, const std::vector<double>& llrs);
  MultiRun run_sc_multi(const std::vector<CodeSpec>& specs,
                        const std::vector<std::vector<double>>& llrs);
  BpRun run_bp_line(const CodeSpec& spec, const std::vector<double>& llrs, int iterations);
  ScRun run_general_line(const CodeSpec& spec, const std::vector<LlrFunction>& llrs);

  // Drives the top unit in P-Mode. SC line variants: c_u selects f_plus (0)
  // or f_equal with estimates z (1); returns N/2 llrs.
  std::vector<double> p_mode(const std::vector<double>& lam, int c_u, const SymbolVec& z);
  // BP line: applies one of the six message rules to N/2 input pairs.
  std::vector<double> bp_p_mode(int op, const std::vector<double>& a, const std::vector<double>& b);
  // General line: stage c_u marginals of N/l columns given coset inputs.
  std::vector<LlrFunction> general_p_mode(const CodeSpec& spec, const std::vector<LlrFunction>& lam,
                                          int c_u, const SymbolVec& coset);

  // Overwrites every register with pseudo-random contents.
  void randomize_state(std::uint64_t seed);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

namespace formulas {
long long pipeline_cycles(long long n);
long long pipeline_pes(long long n);
long long pipeline_registers(long long n);
long long line_cycles(long long n);
long long line_pes(long long n);
long long line_registers(long long n);
long long line_muxes(long long n);
long long limited_cycles(long long n, int i);
long long limited_pes(long long n, int i);
long long multi_cycles(long long n, long long p);
long long multi_pes(long long n, long long p);
long long bp_line_iteration_cycles(long long n);
long long bp_line_pes(long long n);
long long bp_line_mu_v_cells(long long n);
long long general_line_cycles(long long n, int ell, int c);  // published closed form
long long general_line_recursion(long long n, int ell, int c);
long long general_line_pes(long long n, int ell);
long long general_line_registers(long long n, int ell);
}  // namespace formulas

struct FormulaCheck {
  std::string name;
  long long expected = 0;
  long long actual = 0;
  bool ok() const { return expected == actual; }
};

struct SampleRun {
  CycleReport report;
  bool bit_exact = false;
};

// Decodes one block of random evidence (about half the inputs frozen) and
// compares the result with the matching software decoder.
SampleRun sample_run(const ArchConfig& config, std::uint64_t seed, bool trace = false,
                     int bp_iterations = 2);

// Builds the architecture, audits its structure, runs one decode on random
// evidence and compares every count against the closed forms.
std::vector<FormulaCheck> check_formulas(const ArchConfig& config, std::uint64_t seed = 1);

// Codeword bit j depends on input bit k of the Arikan transform.
bool encoding_indicator(int n_bits, int j, int k);

}  // namespace polar::hwsim

#endif  // POLAR_HWSIM_HPP_
