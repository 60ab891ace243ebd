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

#ifndef POLAR_ERROR_HPP_
#define POLAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLAR_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

POLAR_DEFINE_ERROR(DomainError)
POLAR_DEFINE_ERROR(ShapeError)
POLAR_DEFINE_ERROR(UnsupportedError)
POLAR_DEFINE_ERROR(InvalidKernelError)
POLAR_DEFINE_ERROR(ContractError)
POLAR_DEFINE_ERROR(ContradictionError)
POLAR_DEFINE_ERROR(DegenerateEvidenceError)
POLAR_DEFINE_ERROR(ParameterError)
POLAR_DEFINE_ERROR(RefusalError)
POLAR_DEFINE_ERROR(BuildError)
POLAR_DEFINE_ERROR(ParseError)

#undef POLAR_DEFINE_ERROR

}  // namespace polar

#endif  // POLAR_ERROR_HPP_
