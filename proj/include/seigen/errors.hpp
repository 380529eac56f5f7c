// Copyright 2026 the seigen authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace seigen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters, out-of-domain inputs, misconfiguration.
struct ConfigError : Error {
  using Error::Error;
};

// Modulus too small for the requested dimensions/precision.
struct CapacityError : Error {
  CapacityError(const std::string& msg, unsigned required_q_bits_in = 0)
      : Error(msg), required_q_bits(required_q_bits_in) {}
  unsigned required_q_bits;
};

// Key generation, encryption or decryption failure.
struct CryptoError : Error {
  using Error::Error;
};

// Malformed serialized data (files, frames, fixed-width integers).
struct FormatError : Error {
  using Error::Error;
};

// Client/service contract violations and failed jobs.
struct ProtocolError : Error {
  using Error::Error;
};

// Breakdown or non-convergence in the numerical drivers.
struct NumericalError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace seigen
