/*
   Copyright 2026 The mdsqcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MDSQCC_ERRORS_HPP
#define MDSQCC_ERRORS_HPP

#include <stdexcept>

namespace mdsqcc {

/// A hypothesis of an operation or construction does not hold for the given
/// inputs (q not an odd prime power, i out of range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive oracle would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mdsqcc

#endif  // MDSQCC_ERRORS_HPP
