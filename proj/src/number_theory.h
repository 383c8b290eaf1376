// Copyright 2026 The eaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EAQEC_NUMBER_THEORY_H
#define EAQEC_NUMBER_THEORY_H

#include <cstdint>
#include <vector>

namespace eaqec::detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order (Pollard-Brent rho).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// p^e, or 0 on overflow of 64 bits.
std::uint64_t checked_power(std::uint64_t p, unsigned e);

}  // namespace eaqec::detail

#endif
