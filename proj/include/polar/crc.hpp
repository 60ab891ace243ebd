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

#ifndef POLAR_CRC_HPP_
#define POLAR_CRC_HPP_

#include <cstdint>

#include "polar/code_spec.hpp"

namespace polar {

// MSB-first CRC with zero initial value over a bit sequence. The last
// `width` bits of a protected payload hold the CRC of the bits before them.
struct CrcChecker {
  std::uint32_t poly = 0x07;
  int width = 8;

  std::uint32_t compute(const SymbolVec& bits, size_t count) const;
  // data followed by its CRC.
  SymbolVec append(const SymbolVec& data) const;
  bool check_payload(const SymbolVec& payload) const;
  // Checks the unfrozen coordinates of u.
  bool check(const CodeSpec& spec, const SymbolVec& u) const;
};

}  // namespace polar

#endif  // POLAR_CRC_HPP_
