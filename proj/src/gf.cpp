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

#include "polar/gf.hpp"

#include <map>
#include <mutex>

#include "polar/error.hpp"

namespace polar {
namespace {

bool factor_prime_power(int q, int* p, int* k) {
  if (q < 2) return false;
  int base = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  int e = 0;
  int r = q;
  while (r % base == 0) {
    r /= base;
    ++e;
  }
  if (r != 1) return false;
  *p = base;
  *k = e;
  return true;
}

// Polynomials over GF(p) of degree < k packed as base-p integers.
int poly_mul_mod(int a, int b, int p, int k, const std::vector<int>& modpoly) {
  // modpoly: coefficients c_0..c_{k-1} of x^k = -(c_0 + ... ) handled as
  // x^k == sum r_i x^i with r = modpoly.
  std::vector<int> da(k), db(k), prod(2 * k, 0);
  for (int i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + c * modpoly[i]) % p;
  }
  int out = 0;
  for (int i = k - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

}  // namespace

Alphabet::Alphabet(int q) : q_(q) {
  if (q > 256 || !factor_prime_power(q, &p_, &k_))
    throw DomainError("alphabet size must be a prime power in [2, 256], got " +
                      std::to_string(q));
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      int x = a, y = b, s = 0, w = 1;
      for (int i = 0; i < k_; ++i) {
        s += ((x % p_ + y % p_) % p_) * w;
        x /= p_;
        y /= p_;
        w *= p_;
      }
      add_[a * q + b] = s;
    }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (add_[a * q + b] == 0) neg_[a] = b;

  if (k_ == 1) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul_[a * q + b] = (a * b) % p_;
  } else {
    // Search monic polynomials of degree k for one where x has order q-1.
    int candidates = 1;
    for (int i = 0; i < k_; ++i) candidates *= p_;
    bool found = false;
    std::vector<int> red(k_);
    for (int c = 0; c < candidates && !found; ++c) {
      // x^k = -(c_0 + c_1 x + ...), so reduction coefficients are -c_i.
      int t = c;
      for (int i = 0; i < k_; ++i) {
        red[i] = (p_ - t % p_) % p_;
        t /= p_;
      }
      if (red[0] == 0) continue;
      int x = p_;  // the polynomial "x"
      int cur = 1, order = 0;
      do {
        cur = poly_mul_mod(cur, x, p_, k_, red);
        ++order;
      } while (cur != 1 && order <= q);
      if (order == q - 1) found = true;
    }
    if (!found) throw DomainError("no primitive polynomial found");
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul_[a * q + b] = poly_mul_mod(a, b, p_, k_, red);
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  for (int g = 1; g < q; ++g) {
    int cur = g, order = 1;
    while (cur != 1) {
      cur = mul_[cur * q + g];
      ++order;
    }
    if (order == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

Symbol Alphabet::inv(Symbol a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  return inv_[a];
}

Symbol Alphabet::pow(Symbol a, int e) const {
  Symbol r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::shared_ptr<const Alphabet> Alphabet::make(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Alphabet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto a = std::make_shared<const Alphabet>(q);
  cache[q] = a;
  return a;
}

}  // namespace polar
