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

#include "polar/crc.hpp"

#include "polar/error.hpp"

namespace polar {

std::uint32_t CrcChecker::compute(const SymbolVec& bits, size_t count) const {
  if (width < 1 || width > 31) throw ParameterError("CRC width must be in [1, 31]");
  const std::uint32_t top = 1u << (width - 1);
  const std::uint32_t mask = (1u << width) - 1;
  std::uint32_t reg = 0;
  for (size_t i = 0; i < count; ++i) {
    std::uint32_t in = bits[i] ? top : 0;
    bool fb = ((reg ^ in) & top) != 0;
    reg = (reg << 1) & mask;
    if (fb) reg ^= poly & mask;
  }
  return reg;
}

SymbolVec CrcChecker::append(const SymbolVec& data) const {
  SymbolVec out = data;
  std::uint32_t c = compute(data, data.size());
  for (int b = width - 1; b >= 0; --b) out.push_back((c >> b) & 1u);
  return out;
}

bool CrcChecker::check_payload(const SymbolVec& payload) const {
  if (static_cast<int>(payload.size()) < width) return false;
  size_t data = payload.size() - width;
  std::uint32_t c = compute(payload, data);
  for (int b = 0; b < width; ++b)
    if (static_cast<std::uint32_t>(payload[data + b]) != ((c >> (width - 1 - b)) & 1u)) return false;
  return true;
}

bool CrcChecker::check(const CodeSpec& spec, const SymbolVec& u) const {
  return check_payload(spec.extract(u));
}

}  // namespace polar
