// Copyright 2026 The weylgenus authors.
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

namespace weylgenus {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// root systems
struct InvalidCartanMatrix : Error { using Error::Error; };
struct NotFiniteType : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// discrete-series traces
struct NotDominant : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct NonIntegerDimension : Error { using Error::Error; };
struct FactorizationViolation : Error { using Error::Error; };

// genera
struct InvalidDimension : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// job driver
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };

}  // namespace weylgenus
