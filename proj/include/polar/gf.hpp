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

#ifndef POLAR_GF_HPP_
#define POLAR_GF_HPP_

#include <cstdint>
#include <memory>
#include <vector>

namespace polar {

using Symbol = int;

// Arithmetic over GF(q), q = p^k <= 256. Elements are the integers [0, q)
// read as base-p digit vectors (coefficients of a polynomial in the
// primitive element). Addition is digit-wise mod p.
class Alphabet {
 public:
  // Shared, cached instance. Throws DomainError if q is not a prime power
  // in [2, 256].
  static std::shared_ptr<const Alphabet> make(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return k_; }

  Symbol add(Symbol a, Symbol b) const { return add_[a * q_ + b]; }
  Symbol sub(Symbol a, Symbol b) const { return add_[a * q_ + neg_[b]]; }
  Symbol mul(Symbol a, Symbol b) const { return mul_[a * q_ + b]; }
  Symbol neg(Symbol a) const { return neg_[a]; }
  // Throws DomainError for a == 0.
  Symbol inv(Symbol a) const;
  Symbol pow(Symbol a, int e) const;
  bool contains(Symbol a) const { return a >= 0 && a < q_; }
  // A generator of the multiplicative group.
  Symbol primitive() const { return primitive_; }

  explicit Alphabet(int q);

 private:
  int q_, p_, k_;
  Symbol primitive_ = 1;
  std::vector<Symbol> add_, mul_, neg_, inv_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace polar

#endif  // POLAR_GF_HPP_
