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

#ifndef POLAR_HARNESS_HPP_
#define POLAR_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "polar/channel.hpp"
#include "polar/code_spec.hpp"

namespace polar {

struct SimParams {
  std::string decoder = "sc";  // sc, scl, bp, ml
  ChannelModel channel = ChannelModel::bec(0.5);
  int n = 8;
  double rate = 0.5;
  std::string kernel = "arikan";
  int list_size = 8;
  int iters = 50;  // BP iteration cap
  long long trials = 1000;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool crc = false;  // information words end in a CRC-8; SCL picks the first passing path
  // Design erasure probability for BEC construction; negative derives it
  // from the channel's Bhattacharyya parameter.
  double design_eps = -1.0;
  std::optional<CodeSpec> spec;  // replaces the constructed code
};

struct SimRow {
  std::string decoder;
  std::string channel;
  double param = 0;
  int n = 0;
  double rate = 0;
  int list_size = 1;
  int iters = 0;
  long long trials = 0;
  long long bit_errors = 0;
  long long frame_errors = 0;
  long long failures = 0;  // decodes that raised an error (counted as frame errors)
  double ber = 0;
  double fer = 0;
  std::uint64_t seed = 0;
};

double design_erasure(const ChannelModel& ch);
// Arikan kernels use the BEC recursion; other kernels use a Monte-Carlo
// genie construction on the channel.
CodeSpec design_code(const std::string& kernel, int n, double rate, const ChannelModel& ch,
                     double design_eps, std::uint64_t seed);

SimRow run_simulation(const SimParams& p);
std::string csv_header();
std::string csv_row(const SimRow& r);

// Command-line entry point. Exit codes: 0 success, 1 check failure or
// runtime error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polar

#endif  // POLAR_HARNESS_HPP_
