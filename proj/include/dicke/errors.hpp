/*
 * Copyright 2026 The dicke-optics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mode/level index out of range, or shapes that do not compose.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Numeric parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class ModeCollisionError : public Error {
 public:
  using Error::Error;
};

/// Problem size above a configured cap (permanent size, simulation size, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A postselected term does not encode one qudit per register mode.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Non-register modes are not in a definite occupation across terms.
class EntangledAncillaError : public Error {
 public:
  using Error::Error;
};

/// Invalid Dicke / scheme specification (k-vector, scheme parameters).
class SpecError : public Error {
 public:
  using Error::Error;
};

class RootNotFoundError : public Error {
 public:
  using Error::Error;
};

/// A simulated value disagrees with its closed form.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dicke
