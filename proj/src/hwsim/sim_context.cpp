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

#include <algorithm>
#include <cstdio>

#include "units.hpp"

namespace polar::hwsim::detail {

int SimContext::new_pe(bool shared) {
  pe_last_.push_back(-1);
  pe_shared_.push_back(shared ? 1 : 0);
  return static_cast<int>(pe_last_.size()) - 1;
}

void SimContext::reset_run() {
  now_ = 0;
  pending_ = 0;
  std::fill(pe_last_.begin(), pe_last_.end(), -1);
  hist_.clear();
  bookings_.clear();
  hazards_ = 0;
  contention_ = 0;
  trace_.clear();
  contradiction = false;
}

void SimContext::activate(int pe) {
  if (!pe_shared_[pe] && pe_last_[pe] == now_) ++hazards_;
  pe_last_[pe] = now_;
  ++pending_;
}

void SimContext::end_step() {
  const long long end = now_ + latency_;
  if (static_cast<long long>(hist_.size()) < end) hist_.resize(end, 0);
  for (long long t = now_; t < end; ++t) hist_[t] += pending_;
  pending_ = 0;
  now_ = end;
}

void SimContext::book_shared(int array_id, int owner) {
  for (long long t = now_; t < now_ + latency_; ++t) {
    auto [it, fresh] = bookings_.emplace(std::make_pair(array_id, t), owner);
    if (!fresh && it->second != owner) ++contention_;
  }
}

void SimContext::log(const std::string& unit, const std::string& op, const std::string& in,
                     const std::string& out) {
  trace_.push_back(std::to_string(now_) + "," + unit + "," + op + "," + in + "," + out);
}

std::string fmt_llr(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace polar::hwsim::detail
