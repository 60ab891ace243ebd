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

#ifndef POLAR_SPEC_IO_HPP_
#define POLAR_SPEC_IO_HPP_

#include <string>

#include "polar/code_spec.hpp"

namespace polar {

// Text format, one directive per line, '#' starts a comment:
//   kernel ell=<l> q=<q>
//   G                      followed by l rows of l symbols
//   map <t_0> ... <t_{q^l-1}>   (instead of G, for non-linear kernels)
//   glue 0;1,2;3           groups separated by ';'
//   m <levels>
//   frozen <i>[:<v>] ...   may repeat
std::string spec_to_text(const CodeSpec& spec);
CodeSpec spec_from_text(const std::string& text);
CodeSpec read_spec_file(const std::string& path);
void write_spec_file(const std::string& path, const CodeSpec& spec);

// "arikan", "tri4", "rs<q>" (Reed-Solomon over GF(q)).
KernelPtr kernel_by_name(const std::string& name);

}  // namespace polar

#endif  // POLAR_SPEC_IO_HPP_
