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

#include "smoothgap/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "smoothgap/errors.hpp"
#include "smoothgap/memory.hpp"

namespace smoothgap {

namespace {

using u128 = unsigned __int128;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(uint64_t n, uint64_t a) {
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Upper estimate of pi(x), used only for sizing.
uint64_t prime_count_upper(uint64_t x) {
    if (x < 17) return 6;
    double lx = std::log(static_cast<double>(x));
    return static_cast<uint64_t>(1.26 * static_cast<double>(x) / lx) + 1;
}

}  // namespace

bool PrimeTable::contains(uint64_t n) const {
    if (n > limit_) {
        throw DomainError("prime table query " + std::to_string(n) + " above limit " +
                          std::to_string(limit_));
    }
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::span<const uint64_t> PrimeTable::primes_up_to(uint64_t bound) const {
    auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
    return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

PrimeTable sieve_primes(uint64_t limit) {
    require_memory(limit / 16 + 8 * prime_count_upper(limit), "prime table");

    PrimeTable table;
    table.limit_ = limit;
    if (limit < 2) return table;
    table.primes_.reserve(static_cast<std::size_t>(prime_count_upper(limit)));
    table.primes_.push_back(2);

    // bit i stands for 2i + 1
    const uint64_t nbits = (limit - 1) / 2 + 1;
    std::vector<uint64_t> composite((nbits + 63) / 64, 0);
    auto test = [&](uint64_t i) { return (composite[i >> 6] >> (i & 63)) & 1; };

    for (uint64_t i = 1; i < nbits; ++i) {
        if (test(i)) continue;
        const uint64_t p = 2 * i + 1;
        table.primes_.push_back(p);
        if (p > limit / p) continue;
        for (uint64_t j = (p * p) / 2; j < nbits; j += p) composite[j >> 6] |= uint64_t{1} << (j & 63);
    }
    table.primes_.shrink_to_fit();
    return table;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    // The first twelve prime bases are deterministic below 3.3 * 10^24.
    for (uint64_t a : kWitnesses) {
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

Primality primality(const BigInt& n, int rounds) {
    if (sgn(n) <= 0) return {false, false};
    if (fits_u64(n)) return {is_prime(to_u64(n)), false};
    int verdict = mpz_probab_prime_p(n.get_mpz_t(), std::max(rounds, 1));
    return {verdict != 0, verdict == 1};
}

BigInt primorial(uint64_t k) {
    PrimeTable table = sieve_primes(k);
    auto primes = table.primes();
    // balanced product tree over word-sized chunks
    std::vector<BigInt> level;
    BigInt chunk = 1;
    for (uint64_t p : primes) {
        chunk *= from_u64(p);
        if (mpz_sizeinbase(chunk.get_mpz_t(), 2) > 4096) {
            level.push_back(std::move(chunk));
            chunk = 1;
        }
    }
    level.push_back(std::move(chunk));
    while (level.size() > 1) {
        std::vector<BigInt> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level.front();
}

uint64_t largest_prime_leq(uint64_t k) {
    if (k < 2) throw DomainError("largest_prime_leq requires k >= 2, got " + std::to_string(k));
    uint64_t n = k;
    while (!is_prime(n)) --n;
    return n;
}

}  // namespace smoothgap
