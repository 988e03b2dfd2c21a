// Copyright 2026 The thermvqe Authors
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

namespace thermvqe {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A register or matrix exceeds the supported size, or is empty.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// A qubit, parameter or branch index is out of range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// A gate references a parameter that cannot be resolved.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Two objects that must agree on a dimension do not.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A scalar argument lies outside its domain.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// The circuit contains a gate the parameter-shift rule cannot differentiate.
class UnsupportedGateError : public Error {
  public:
    using Error::Error;
};

/// A mixing coefficient is too small to divide by.
class SingularMixingError : public Error {
  public:
    using Error::Error;
};

/// Input data is non-finite or otherwise unusable.
class DataError : public Error {
  public:
    using Error::Error;
};

/// The reweighted normalization vanished numerically.
class UnderflowError : public Error {
  public:
    using Error::Error;
};

} // namespace thermvqe
