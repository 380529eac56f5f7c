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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace seigen {

// All multi-precision arithmetic is carried by GMP's mpz_class; the helpers
// below cover the operations the C++ wrapper does not expose directly.
using Bigint = mpz_class;

// base^exp mod m, exp >= 0.
Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod);

// Multiplicative inverse mod m; throws CryptoError when none exists.
Bigint invmod(const Bigint& value, const Bigint& mod);

Bigint next_prime(const Bigint& v);
bool is_probable_prime(const Bigint& v);

// Bits in |v|; 0 for v == 0.
size_t bit_length(const Bigint& v);

Bigint pow2(unsigned bits);
Bigint pow10(unsigned digits);

// Fixed-width big-endian serialization of non-negative values.
// export_be zero-pads on the left and throws FormatError when the value
// does not fit or is negative.
void export_be(const Bigint& v, std::span<uint8_t> out);
std::vector<uint8_t> to_be_bytes(const Bigint& v, size_t width);
Bigint from_be_bytes(std::span<const uint8_t> bytes);

}  // namespace seigen
