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

#include <random>
#include <vector>

#include "doctest.h"
#include "env_guard.hpp"
#include "oracles.hpp"
#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"

using namespace smoothgap;

namespace {

std::vector<uint64_t> table_primes(uint64_t limit) {
    PrimeTable t = sieve_primes(limit);
    return {t.primes().begin(), t.primes().end()};
}

}  // namespace

TEST_SUITE("primes") {

TEST_CASE("sieve_primes examples") {
    CHECK(table_primes(10) == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(100).size() == 25);
    CHECK(table_primes(0).empty());
    CHECK(table_primes(1).empty());
    CHECK(table_primes(2) == std::vector<uint64_t>{2});

    PrimeTable million = sieve_primes(1'000'000);
    CHECK(million.size() == 78498);
    auto bytes = oracle::byte_sieve(1'000'000);
    uint64_t count = 0;
    for (uint8_t b : bytes) count += b;
    CHECK(million.size() == count);
}

TEST_CASE("sieve_primes matches trial division for limits up to 10^5") {
    for (uint64_t limit = 0; limit <= 300; ++limit) {
        REQUIRE(table_primes(limit) == oracle::primes_up_to(limit));
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint64_t> dist(301, 100'000);
    for (int i = 0; i < 12; ++i) {
        uint64_t limit = dist(rng);
        CHECK(table_primes(limit) == oracle::primes_up_to(limit));
    }
    CHECK(table_primes(100'000) == oracle::primes_up_to(100'000));
}

TEST_CASE("PrimeTable membership") {
    PrimeTable t = sieve_primes(1000);
    for (uint64_t n = 0; n <= 1000; ++n) REQUIRE(t.contains(n) == oracle::is_prime(n));
    CHECK_THROWS_AS(t.contains(1001), DomainError);
    CHECK(t.primes_up_to(10).size() == 4);
    CHECK(t.primes_up_to(1).empty());
}

TEST_CASE("sieve_primes respects the memory budget") {
    EnvGuard guard("SMOOTHGAP_MEM_BUDGET", "1000");
    CHECK_THROWS_AS(sieve_primes(1'000'000), CapacityError);
    CHECK_NOTHROW(sieve_primes(100));
}

TEST_CASE("is_prime on machine words") {
    CHECK(is_prime(uint64_t{2}));
    CHECK_FALSE(is_prime(uint64_t{1}));
    CHECK_FALSE(is_prime(uint64_t{0}));
    CHECK_FALSE(is_prime(uint64_t{614889782588491410ULL}));
    for (uint64_t n = 0; n < 20'000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
    // strong pseudoprimes to small bases and Carmichael numbers
    for (uint64_t n : {561ULL, 2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL,
                       3474749660383ULL, 341550071728321ULL, 3825123056546413051ULL}) {
        CHECK_FALSE(is_prime(n));
    }
    CHECK(is_prime(uint64_t{2305843009213693951ULL}));   // 2^61 - 1
    CHECK(is_prime(uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
    CHECK_FALSE(is_prime(uint64_t{18446744073709551615ULL}));
}

TEST_CASE("primality above 64 bits is flagged probabilistic") {
    BigInt m127 = (BigInt(1) << 127) - 1;
    Primality p = primality(m127);
    CHECK(p.prime);
    CHECK(p.probabilistic);

    BigInt f7 = (BigInt(1) << 128) + 1;  // composite Fermat number
    CHECK_FALSE(is_prime(f7));
    CHECK_FALSE(primality(f7).probabilistic);

    Primality small = primality(BigInt(97));
    CHECK(small.prime);
    CHECK_FALSE(small.probabilistic);
    CHECK_FALSE(is_prime(BigInt(-7)));
}

TEST_CASE("primorial") {
    CHECK(primorial(0) == 1);
    CHECK(primorial(1) == 1);
    CHECK(primorial(5) == 30);
    CHECK(primorial(50) == BigInt("614889782588491410"));
    CHECK(primorial(50) == primorial(47));
    CHECK_FALSE(fits_u64(primorial(53)));
    CHECK(fits_u64(primorial(52)));

    BigInt running = 1;
    for (uint64_t k = 2; k <= 1000; ++k) {
        if (oracle::is_prime(k)) running *= from_u64(k);
        REQUIRE(primorial(k) == running);
    }
}

TEST_CASE("largest_prime_leq") {
    CHECK(largest_prime_leq(2) == 2);
    CHECK(largest_prime_leq(50) == 47);
    CHECK(largest_prime_leq(35265) == 35257);
    CHECK_THROWS_AS(largest_prime_leq(1), DomainError);
    CHECK_THROWS_AS(largest_prime_leq(0), DomainError);
    for (uint64_t k = 2; k <= 5000; ++k) {
        uint64_t z = largest_prime_leq(k);
        REQUIRE(oracle::is_prime(z));
        REQUIRE(z <= k);
        for (uint64_t n = z + 1; n <= k; ++n) REQUIRE_FALSE(oracle::is_prime(n));
    }
}

}  // TEST_SUITE
