// Copyright 2026 The molp Authors
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

#ifndef MOLP_ERRORS_H_
#define MOLP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace molp {

// A caller broke a documented precondition (dimension mismatch, a witness
// that is not feasible, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A numeric parameter is out of its admissible range (epsilon <= 0, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The problem adapter does not offer the requested subproblem, natively or
// through a reduction.
class UnsupportedOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: rationals, instance files, solution files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance data breaks the value-range or separation assumption.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A runtime invariant of an algorithm failed. Only raised when the
// corresponding assertion option is enabled or an oracle broke its contract.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace molp

#endif  // MOLP_ERRORS_H_
