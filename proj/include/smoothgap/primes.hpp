// Copyright 2026 The smoothgap Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smoothgap/bigint.hpp"

namespace smoothgap {

/// Miller-Rabin rounds used above 2^64 unless a caller asks otherwise.
inline constexpr int kDefaultPrimalityRounds = 40;

/// Every prime in [2, limit], ascending. Immutable once built.
class PrimeTable {
  public:
    PrimeTable() = default;

    uint64_t limit() const noexcept { return limit_; }
    std::span<const uint64_t> primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }

    /// Membership for n <= limit(); throws DomainError above the limit.
    bool contains(uint64_t n) const;

    /// Prefix of primes() holding the primes <= bound.
    std::span<const uint64_t> primes_up_to(uint64_t bound) const;

  private:
    friend PrimeTable sieve_primes(uint64_t limit);

    uint64_t limit_ = 0;
    std::vector<uint64_t> primes_;
};

/// Odd-only bit sieve of Eratosthenes. Throws CapacityError when the table
/// would not fit the memory budget.
PrimeTable sieve_primes(uint64_t limit);

/// Deterministic for every 64-bit n.
bool is_prime(uint64_t n);

struct Primality {
    bool prime = false;
    /// Set when n >= 2^64 and the verdict came from random-base rounds.
    bool probabilistic = false;
};

Primality primality(const BigInt& n, int rounds = kDefaultPrimalityRounds);

inline bool is_prime(const BigInt& n, int rounds = kDefaultPrimalityRounds) {
    return primality(n, rounds).prime;
}

/// Product of all primes <= k; 1 when there are none.
BigInt primorial(uint64_t k);

/// Largest prime p <= k. Throws DomainError for k < 2.
uint64_t largest_prime_leq(uint64_t k);

}  // namespace smoothgap
