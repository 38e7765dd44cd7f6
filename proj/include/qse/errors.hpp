// Copyright 2026 The QSE Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qse {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together (mismatched operands, non-factorizable sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter outside its admissible range (p < 1, q <= 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A function argument outside the mathematical domain (log of x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An object failed its invariants (density operator, Kraus set, Choi matrix).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Matrix expected to be Hermitian is not.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A bound or theorem evaluated outside the parameter region where it holds.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Malformed channel/state file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qse
