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

#pragma once

#include <stdexcept>
#include <string>

namespace omt {

/// Base class of every exception thrown by the library. Checks that are
/// expected to fail on ordinary input return report structs instead; these
/// exceptions signal violated preconditions or malformed input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of the zero element") {}
};

struct EmptyFamily : Error {
  EmptyFamily() : Error("basis family is empty") {}
};

struct NotAMatroid : Error {
  using Error::Error;
};

struct NotABasis : Error {
  using Error::Error;
};

struct ElementInBasis : Error {
  using Error::Error;
};

struct NotACircuit : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct IncompatibleDomains : Error {
  using Error::Error;
};

struct InvalidWick : Error {
  using Error::Error;
};

struct InvalidRgp : Error {
  using Error::Error;
};

struct InvalidSignature : Error {
  using Error::Error;
};

struct InconsistentRatios : Error {
  using Error::Error;
};

struct SupportMismatch : Error {
  using Error::Error;
};

struct NotIsotropic : Error {
  using Error::Error;
};

struct TractConditionFailed : Error {
  using Error::Error;
};

struct GroundSetTooLarge : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace omt
