// Copyright 2026 The Eigenlogic Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace eigenlogic {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A value lies outside the domain an operation accepts (unnormalized
/// state, out-of-range angle, non-projective observable, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Integer result does not fit the return type.
class OverflowError : public Error {
  public:
    using Error::Error;
};

} // namespace eigenlogic
