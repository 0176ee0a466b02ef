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
#include <optional>
#include <span>
#include <vector>

#include "smoothgap/bigint.hpp"
#include "smoothgap/primes.hpp"

namespace smoothgap {

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;
};

/// Full factorization of n, bases ascending. Empty for n = 1.
struct SmoothnessCertificate {
    BigInt n;
    std::vector<PrimePower> factors;
    std::optional<BigInt> largest_prime_factor;
    /// True when some base above 2^64 was accepted by a probabilistic test.
    bool probabilistic = false;
};

inline constexpr uint64_t kDefaultTrialBound = 1'000'000;

/// Trial division by primes <= trial_bound. A leftover cofactor is accepted
/// as a prime factor when it is below trial_bound^2 or passes is_prime;
/// otherwise throws BudgetExceededError carrying the leftover.
SmoothnessCertificate factorize(const BigInt& n, uint64_t trial_bound = kDefaultTrialBound);

struct SmoothnessResult {
    bool smooth = false;
    /// Present iff smooth.
    std::optional<SmoothnessCertificate> certificate;
    /// What is left after dividing out every prime <= y; 1 iff smooth.
    BigInt cofactor;
};

/// Repeated division by the primes <= y. Reusable across many queries.
class SmoothnessTester {
  public:
    explicit SmoothnessTester(uint64_t y);

    uint64_t bound() const noexcept { return y_; }
    std::span<const uint64_t> primes() const noexcept { return primes_; }

    /// n with every prime factor <= y removed. n must be >= 1.
    uint64_t rough_part(uint64_t n) const;
    bool is_smooth(uint64_t n) const { return rough_part(n) == 1; }

    BigInt rough_part(const BigInt& n) const;
    SmoothnessResult test(const BigInt& n) const;

  private:
    uint64_t y_;
    std::vector<uint64_t> primes_;
};

/// Membership of n >= 1 in S(y), the y-smooth integers. 1 is y-smooth.
SmoothnessResult is_smooth(const BigInt& n, uint64_t y);

/// The y-smooth integers in [1, bound], ascending.
std::vector<uint64_t> smooth_numbers_up_to(uint64_t y, uint64_t bound);

}  // namespace smoothgap
