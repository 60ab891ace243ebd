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

#include "polar/harness.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "polar/bp.hpp"
#include "polar/construction.hpp"
#include "polar/crc.hpp"
#include "polar/error.hpp"
#include "polar/hwsim.hpp"
#include "polar/oracle.hpp"
#include "polar/sc.hpp"
#include "polar/scl.hpp"
#include "polar/spec_io.hpp"

namespace polar {

namespace {

constexpr long long kDesignTrials = 2000;

int exponent_for(const Kernel& k, int n) {
  int m = 0;
  long long v = 1;
  while (v < n) {
    v *= k.ell();
    ++m;
  }
  if (v != n || n < k.ell()) throw ParameterError("N must be a power of the kernel dimension");
  return m;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool valid_decoder(const std::string& d) { return d == "sc" || d == "scl" || d == "bp" || d == "ml"; }

SymbolVec decode_block(const std::string& dec, const CodeSpec& spec, const std::vector<LlrFunction>& llrs,
                       int list_size, int iters, const std::optional<CrcChecker>& crc) {
  if (dec == "sc") return decode_sc(spec, llrs).u_hat;
  if (dec == "scl") return select_final(decode_scl(spec, ListState::from_llrs(llrs), list_size), crc, &spec).first;
  if (dec == "ml") return ml_decode(spec, llrs).u;
  if (dec == "bp") {
    std::vector<double> b(llrs.size());
    for (size_t i = 0; i < llrs.size(); ++i) {
      if (llrs[i].q() != 2) throw UnsupportedError("BP needs binary evidence");
      b[i] = llrs[i][1];
    }
    return bp_decode(spec, b, iters).u_hat;
  }
  throw ParameterError("unknown decoder '" + dec + "'");
}

SymbolVec decode_binary(const std::string& dec, const CodeSpec& spec, const std::vector<double>& llrs,
                        int list_size, int iters, const std::optional<CrcChecker>& crc) {
  if (dec == "sc" && is_arikan(spec.kernel())) return decode_sc_arikan(spec, llrs).u_hat;
  if (dec == "scl") return select_final(decode_scl(spec, ListState::from_binary_llrs(llrs), list_size), crc, &spec).first;
  if (dec == "bp") return bp_decode(spec, llrs, iters).u_hat;
  if (dec == "ml") return ml_decode(spec, llrs).u;
  return decode_sc_general(spec, llrs).u_hat;
}

}  // namespace

double design_erasure(const ChannelModel& ch) {
  switch (ch.kind) {
    case ChannelModel::Kind::kBec: return ch.param;
    case ChannelModel::Kind::kBsc: return 2.0 * std::sqrt(ch.param * (1.0 - ch.param));
    case ChannelModel::Kind::kBiAwgn: return std::exp(-1.0 / (2.0 * ch.param * ch.param));
  }
  return 0.5;
}

CodeSpec design_code(const std::string& kernel, int n, double rate, const ChannelModel& ch,
                     double design_eps, std::uint64_t seed) {
  KernelPtr k = kernel_by_name(kernel);
  CodeSpec base(k, exponent_for(*k, n));
  if (is_arikan(*k)) return construct_bec(base, design_eps >= 0 ? design_eps : design_erasure(ch), rate);
  return construct_montecarlo(base, ch, rate, kDesignTrials, derive_seed(seed, 0x5eedULL), 1);
}

SimRow run_simulation(const SimParams& p) {
  if (!valid_decoder(p.decoder)) throw ParameterError("unknown decoder '" + p.decoder + "'");
  if (p.trials < 1) throw ParameterError("trials must be positive");
  if (p.jobs < 1) throw ParameterError("jobs must be positive");
  if (p.list_size < 1) throw ParameterError("list size must be positive");
  if (p.iters < 1) throw ParameterError("iterations must be positive");
  const CodeSpec spec = p.spec ? *p.spec : design_code(p.kernel, p.n, p.rate, p.channel, p.design_eps, p.seed);
  if (spec.q() != 2) throw ParameterError("simulation needs a binary kernel");
  const int k = spec.num_info();
  std::optional<CrcChecker> crc;
  if (p.crc) {
    if (k < 8) throw ParameterError("CRC-8 needs at least 8 information bits");
    crc = CrcChecker{};
  }
  const std::vector<int> info = spec.info_indices();
  struct Tally {
    long long bits = 0, frames = 0, failures = 0;
  };
  std::vector<Tally> lanes(p.jobs);
  auto work = [&](int lane) {
    Tally& t = lanes[lane];
    std::bernoulli_distribution coin(0.5);
    for (long long trial = lane; trial < p.trials; trial += p.jobs) {
      Rng rng(derive_seed(p.seed, static_cast<std::uint64_t>(trial)));
      SymbolVec word(crc ? k - crc->width : k);
      for (Symbol& b : word) b = coin(rng) ? 1 : 0;
      if (crc) word = crc->append(word);
      const SymbolVec u = spec.expand(word);
      const std::vector<double> llrs = transmit(p.channel, encode(spec, u), rng);
      try {
        const SymbolVec u_hat = decode_binary(p.decoder, spec, llrs, p.list_size, p.iters, crc);
        long long errs = 0;
        for (int i : info) errs += u_hat[i] != u[i];
        t.bits += errs;
        t.frames += errs > 0;
      } catch (const Error&) {
        ++t.failures;
        ++t.frames;
        t.bits += k;
      }
    }
  };
  if (p.jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> th;
    for (int l = 0; l < p.jobs; ++l) th.emplace_back(work, l);
    for (auto& t : th) t.join();
  }
  SimRow r;
  for (const Tally& t : lanes) {
    r.bit_errors += t.bits;
    r.frame_errors += t.frames;
    r.failures += t.failures;
  }
  r.decoder = p.decoder;
  r.channel = p.channel.name();
  r.param = p.channel.param;
  r.n = spec.n_total();
  r.rate = spec.rate();
  r.list_size = p.decoder == "scl" ? p.list_size : 1;
  r.iters = p.decoder == "bp" ? p.iters : 0;
  r.trials = p.trials;
  r.ber = k ? static_cast<double>(r.bit_errors) / (static_cast<double>(p.trials) * k) : 0.0;
  r.fer = static_cast<double>(r.frame_errors) / static_cast<double>(p.trials);
  r.seed = p.seed;
  return r;
}

std::string csv_header() { return "decoder,channel,param,N,rate,list_size,iters,trials,ber,fer,seed"; }

std::string csv_row(const SimRow& r) {
  std::ostringstream os;
  os << r.decoder << "," << r.channel << "," << fmt(r.param) << "," << r.n << "," << fmt(r.rate) << ","
     << r.list_size << "," << r.iters << "," << r.trials << "," << fmt(r.ber) << "," << fmt(r.fer) << ","
     << r.seed;
  return os.str();
}

// ---------------------------------------------------------------- CLI

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> t;
  std::string w;
  while (is >> w) t.push_back(w);
  return t;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end) throw ParseError("not a number: " + s);
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Appends the key=value lines of a --config file as flags of subcommand sub,
// skipping keys already given on the command line.
void expand_config(CLI::App& app, std::vector<std::string>& args) {
  size_t sub_pos = args.size();
  CLI::App* sub = nullptr;
  for (size_t i = 0; i < args.size(); ++i) {
    try {
      sub = app.get_subcommand(args[i]);
      sub_pos = i;
      break;
    } catch (const CLI::OptionNotFound&) {
    }
  }
  if (!sub) return;
  std::string path;
  for (size_t i = sub_pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return;
  auto given = [&](const std::string& key) {
    for (size_t i = sub_pos + 1; i < args.size(); ++i)
      if (args[i] == "--" + key || args[i].rfind("--" + key + "=", 0) == 0) return true;
    return false;
  };
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "config" || given(key)) continue;
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (!opt) throw UsageError("unknown config key: " + key);
    if (opt->get_expected_min() == 0) {
      if (value == "1" || value == "true" || value == "yes") extra.push_back("--" + key);
    } else {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  args.insert(args.begin() + static_cast<long>(sub_pos) + 1, extra.begin(), extra.end());
}

std::uint64_t default_seed() {
  const char* env = std::getenv("POLARBENCH_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end) throw UsageError("POLARBENCH_SEED is not an unsigned integer");
  return v;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string join_symbols(const SymbolVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar code construction, simulation and hardware models"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string config;

  // construct
  CLI::App* construct = app.add_subcommand("construct", "Choose the frozen set of a code");
  int c_n = 8;
  double c_rate = 0.5, c_eps = -1.0;
  std::string c_kernel = "arikan", c_method = "bec", c_channel = "bec:0.5", c_out;
  long long c_trials = 10000;
  int c_jobs = 1;
  construct->add_option("--N", c_n, "code length");
  construct->add_option("--rate", c_rate, "information rate");
  construct->add_option("--kernel", c_kernel, "arikan, tri4 or rsQ");
  construct->add_option("--method", c_method, "bec or mc")->check(CLI::IsMember({"bec", "mc"}));
  construct->add_option("--eps", c_eps, "design erasure probability (bec)");
  construct->add_option("--channel", c_channel, "channel kind:param");
  construct->add_option("--trials", c_trials, "Monte-Carlo trials (mc)");
  construct->add_option("--jobs", c_jobs, "worker threads");
  construct->add_option("--out", c_out, "output file");

  // simulate
  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo BER/FER evaluation");
  SimParams sp;
  std::vector<std::string> s_decoders{"sc"}, s_channels{"bec:0.5"};
  std::string s_spec, s_out;
  simulate->add_option("--decoder", s_decoders, "sc, scl, bp or ml (comma list)")->delimiter(',');
  simulate->add_option("--channel", s_channels, "channel kind:param (comma list)")->delimiter(',');
  simulate->add_option("--N", sp.n, "code length");
  simulate->add_option("--rate", sp.rate, "information rate");
  simulate->add_option("--kernel", sp.kernel, "arikan or tri4");
  simulate->add_option("--list", sp.list_size, "SCL list size");
  simulate->add_option("--iters", sp.iters, "BP iteration cap");
  simulate->add_option("--trials", sp.trials, "trials per row");
  simulate->add_option("--jobs", sp.jobs, "worker threads");
  simulate->add_flag("--crc", sp.crc, "append CRC-8 to the information word");
  simulate->add_option("--design-eps", sp.design_eps, "BEC design erasure probability");
  simulate->add_option("--spec", s_spec, "code specification file");
  simulate->add_option("--out", s_out, "CSV output file");

  // hwsim
  CLI::App* hw = app.add_subcommand("hwsim", "Cycle-accurate decoder architecture model");
  std::string h_arch = "sc-line";
  hwsim::ArchConfig hc;
  int h_iters = 2;
  long long h_trials = 0;
  bool h_check = false, h_trace = false;
  hw->add_option("--arch", h_arch, "sc-pipeline, sc-line, sc-line-limited, sc-line-multi, bp-line, general-line");
  hw->add_option("--N", hc.n, "code length");
  hw->add_option("--i", hc.limit, "limited parallelism: N/2^i PEs");
  hw->add_option("--p", hc.codewords, "codewords sharing the auxiliary array");
  hw->add_option("--ell", hc.ell, "general line kernel dimension");
  hw->add_option("--latency", hc.pe_latency, "clock cycles per PE activation");
  hw->add_option("--iters", h_iters, "BP iterations in the sample run");
  hw->add_option("--trials", h_trials, "extra bit-exactness regressions");
  hw->add_flag("--check-formulas", h_check, "compare counts with the closed forms");
  hw->add_flag("--trace", h_trace, "print the per-activation trace");

  // encode / decode
  CLI::App* enc = app.add_subcommand("encode", "Encode one information word");
  CLI::App* dec = app.add_subcommand("decode", "Decode one block of channel llrs");
  std::string e_spec, e_in, e_out, d_spec, d_in, d_out, d_decoder = "sc";
  int d_list = 8, d_iters = 50;
  bool d_crc = false;
  enc->add_option("--spec", e_spec, "code specification file")->required();
  enc->add_option("--in", e_in, "information symbols")->required();
  enc->add_option("--out", e_out, "codeword output file");
  dec->add_option("--spec", d_spec, "code specification file")->required();
  dec->add_option("--in", d_in, "llr file: N values, or N rows of q values")->required();
  dec->add_option("--out", d_out, "information symbol output file");
  dec->add_option("--decoder", d_decoder, "sc, scl, bp or ml");
  dec->add_option("--list", d_list, "SCL list size");
  dec->add_option("--iters", d_iters, "BP iteration cap");
  dec->add_flag("--crc", d_crc, "select the first list path passing CRC-8");

  for (CLI::App* a : {construct, simulate, hw})
    a->add_option("--seed", seed, "random seed (default POLARBENCH_SEED or 1)");
  for (CLI::App* a : {construct, simulate, hw, enc, dec}) a->add_option("--config", config, "key=value file");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    expand_config(app, args);
    seed = default_seed();
    std::vector<const char*> cargs{argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) {
      const ChannelModel ch = ChannelModel::parse(c_channel);
      KernelPtr k = kernel_by_name(c_kernel);
      CodeSpec base(k, exponent_for(*k, c_n));
      CodeSpec spec = c_method == "bec" ? construct_bec(base, c_eps >= 0 ? c_eps : design_erasure(ch), c_rate)
                                        : construct_montecarlo(base, ch, c_rate, c_trials, seed, c_jobs);
      emit(c_out, spec_to_text(spec), out);
      return 0;
    }
    if (simulate->parsed()) {
      for (const auto& d : s_decoders)
        if (!valid_decoder(d)) throw ParameterError("unknown decoder '" + d + "'");
      std::vector<ChannelModel> chans;
      for (const auto& c : s_channels) chans.push_back(ChannelModel::parse(c));
      if (!s_spec.empty()) sp.spec = read_spec_file(s_spec);
      sp.seed = seed;
      std::string csv = csv_header() + "\n";
      for (const ChannelModel& ch : chans) {
        for (const auto& d : s_decoders) {
          SimParams p = sp;
          p.channel = ch;
          p.decoder = d;
          csv += csv_row(run_simulation(p)) + "\n";
        }
      }
      emit(s_out, csv, out);
      return 0;
    }
    if (hw->parsed()) {
      hc.arch = hwsim::parse_arch(h_arch);
      hwsim::SampleRun sr = hwsim::sample_run(hc, seed, h_trace, h_iters);
      out << "arch=" << h_arch << "\nN=" << hc.n << "\n" << sr.report.to_text();
      bool ok = sr.bit_exact;
      if (h_trials > 0) {
        long long bad = 0;
        for (long long t = 0; t < h_trials; ++t)
          bad += !hwsim::sample_run(hc, derive_seed(seed, static_cast<std::uint64_t>(t)), false, h_iters).bit_exact;
        out << "regressions=" << h_trials << "\nregression_failures=" << bad << "\n";
        ok = ok && bad == 0;
      }
      if (h_check) {
        bool all = true;
        for (const auto& f : hwsim::check_formulas(hc, seed)) {
          out << "check " << f.name << " expected=" << f.expected << " actual=" << f.actual << " "
              << (f.ok() ? "ok" : "MISMATCH") << "\n";
          all = all && f.ok();
        }
        out << "formulas=" << (all ? "ok" : "mismatch") << "\n";
        ok = ok && all;
      }
      if (h_trace)
        for (const auto& line : sr.report.trace) out << line << "\n";
      return ok ? 0 : 1;
    }
    if (enc->parsed()) {
      const CodeSpec spec = read_spec_file(e_spec);
      SymbolVec info;
      for (const auto& t : tokens(read_file(e_in))) info.push_back(static_cast<Symbol>(parse_double(t)));
      if (static_cast<int>(info.size()) != spec.num_info())
        throw ShapeError("expected " + std::to_string(spec.num_info()) + " information symbols");
      const SymbolVec u = spec.expand(info);
      spec.check_input(u);
      emit(e_out, join_symbols(encode(spec, u)), out);
      return 0;
    }
    if (dec->parsed()) {
      if (!valid_decoder(d_decoder)) throw ParameterError("unknown decoder '" + d_decoder + "'");
      const CodeSpec spec = read_spec_file(d_spec);
      std::vector<double> vals;
      for (const auto& t : tokens(read_file(d_in))) vals.push_back(parse_double(t));
      const int n = spec.n_total(), q = spec.q();
      std::optional<CrcChecker> crc;
      if (d_crc) crc = CrcChecker{};
      SymbolVec u_hat;
      if (q == 2 && static_cast<int>(vals.size()) == n) {
        u_hat = decode_binary(d_decoder, spec, vals, d_list, d_iters, crc);
      } else if (static_cast<long long>(vals.size()) == static_cast<long long>(n) * q) {
        std::vector<LlrFunction> l;
        for (int i = 0; i < n; ++i) l.emplace_back(std::vector<double>(vals.begin() + i * q, vals.begin() + (i + 1) * q));
        u_hat = decode_block(d_decoder, spec, l, d_list, d_iters, crc);
      } else {
        throw ShapeError("llr file must hold N values or N rows of q values");
      }
      emit(d_out, join_symbols(spec.extract(u_hat)), out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BuildError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace polar
