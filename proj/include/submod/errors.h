// Copyright 2026 The Authors.
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

#ifndef SUBMOD_ERRORS_H_
#define SUBMOD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace submod {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside the mathematical domain of an operation (index out of
// range, k > n, epsilon outside (0,1), negative matrix entry, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed instance input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The request is well-formed but exceeds a configured enumeration limit.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace submod

#endif  // SUBMOD_ERRORS_H_
