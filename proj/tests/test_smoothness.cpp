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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "env_guard.hpp"
#include "oracles.hpp"
#include "smoothgap/errors.hpp"
#include "smoothgap/smoothness.hpp"

using namespace smoothgap;

namespace {

BigInt product(const SmoothnessCertificate& cert) {
    BigInt p = 1;
    for (const PrimePower& f : cert.factors) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        p *= power;
    }
    return p;
}

void check_certificate(const SmoothnessCertificate& cert) {
    CHECK(product(cert) == cert.n);
    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        CHECK(is_prime(cert.factors[i].prime));
        CHECK(cert.factors[i].exponent >= 1);
        if (i > 0) CHECK(cert.factors[i - 1].prime < cert.factors[i].prime);
    }
    CHECK(cert.largest_prime_factor.has_value() == (cert.n != 1));
    if (cert.largest_prime_factor) CHECK(*cert.largest_prime_factor == cert.factors.back().prime);
}

}  // namespace

TEST_SUITE("smoothness") {

TEST_CASE("factorize examples") {
    SmoothnessCertificate one = factorize(BigInt(1));
    CHECK(one.factors.empty());
    CHECK_FALSE(one.largest_prime_factor);

    SmoothnessCertificate c = factorize(BigInt(246));
    REQUIRE(c.factors.size() == 3);
    CHECK(c.factors[0].prime == 2);
    CHECK(c.factors[1].prime == 3);
    CHECK(c.factors[2].prime == 41);
    CHECK(*c.largest_prime_factor == 41);
    check_certificate(c);

    SmoothnessCertificate w = factorize(BigInt("614889782588491410"));
    CHECK(w.factors.size() == 15);
    CHECK(*w.largest_prime_factor == 47);
    for (const PrimePower& f : w.factors) CHECK(f.exponent == 1);
    check_certificate(w);

    CHECK_THROWS_AS(factorize(BigInt(0)), DomainError);
}

TEST_CASE("factorize certificate invariants") {
    for (uint64_t n = 1; n <= 3000; ++n) {
        SmoothnessCertificate c = factorize(from_u64(n));
        REQUIRE(product(c) == c.n);
        if (n > 1) REQUIRE(to_u64(*c.largest_prime_factor) == oracle::lpf(n));
    }
    check_certificate(factorize(BigInt("1000000000000000000000000")));
}

TEST_CASE("factorize beyond the trial bound") {
    // 10403 = 101 * 103 with only primes <= 100 available
    try {
        factorize(BigInt(10403), 100);
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(e.residual() == "10403");
    }
    // a prime cofactor is accepted, with a probabilistic flag above 2^64
    BigInt m89 = (BigInt(1) << 89) - 1;
    SmoothnessCertificate c = factorize(2 * m89);
    REQUIRE(c.factors.size() == 2);
    CHECK(c.factors[1].prime == m89);
    CHECK(c.probabilistic);
    check_certificate(c);
    // below the square of the bound the leftover is prime without a test
    SmoothnessCertificate d = factorize(BigInt(2 * 9973), 100);
    CHECK(d.factors.back().prime == 9973);
}

TEST_CASE("is_smooth examples") {
    CHECK(is_smooth(BigInt(8), 2).smooth);
    SmoothnessResult r246 = is_smooth(BigInt(246), 47);
    CHECK(r246.smooth);
    REQUIRE(r246.certificate);
    CHECK(*r246.certificate->largest_prime_factor == 41);

    SmoothnessResult r106 = is_smooth(BigInt(106), 47);
    CHECK_FALSE(r106.smooth);
    CHECK(r106.cofactor == 53);
    CHECK_FALSE(r106.certificate);

    SmoothnessResult unit = is_smooth(BigInt(1), 2);
    CHECK(unit.smooth);
    CHECK(unit.certificate->factors.empty());

    CHECK_THROWS_AS(is_smooth(BigInt(0), 5), DomainError);
    CHECK_THROWS_AS(is_smooth(BigInt(10), 1), DomainError);
}

TEST_CASE("is_smooth on large inputs never factors the rough part") {
    BigInt w = BigInt("614889782588491410");
    BigInt cube = w * w * w;
    SmoothnessResult ok = is_smooth(cube, 47);
    CHECK(ok.smooth);
    check_certificate(*ok.certificate);

    BigInt rough = (BigInt(1) << 127) - 1;  // prime
    SmoothnessResult bad = is_smooth(cube * rough * rough, 47);
    CHECK_FALSE(bad.smooth);
    CHECK(bad.cofactor == rough * rough);
    CHECK_FALSE(is_smooth(cube * 53, 47).smooth);
    CHECK(is_smooth(cube * 53, 53).smooth);
}

TEST_CASE("is_smooth agrees with brute-force largest prime factor") {
    std::vector<uint64_t> lpf(100'001);
    for (uint64_t n = 1; n <= 100'000; ++n) lpf[n] = oracle::lpf(n);
    for (uint64_t y : {2, 3, 5, 7, 47}) {
        SmoothnessTester tester(y);
        for (uint64_t n = 1; n <= 100'000; ++n) {
            REQUIRE(tester.is_smooth(n) == (lpf[n] <= y));
        }
        for (uint64_t n = 1; n <= 2'000; ++n) {
            REQUIRE(is_smooth(from_u64(n), y).smooth == (lpf[n] <= y));
        }
    }
}

TEST_CASE("smooth_numbers_up_to examples") {
    CHECK(smooth_numbers_up_to(2, 10) == std::vector<uint64_t>{1, 2, 4, 8});
    CHECK(smooth_numbers_up_to(5, 100).size() == 34);
    std::vector<uint64_t> all(20);
    for (uint64_t i = 0; i < 20; ++i) all[i] = i + 1;
    CHECK(smooth_numbers_up_to(47, 20) == all);
    CHECK(smooth_numbers_up_to(3, 1) == std::vector<uint64_t>{1});
    CHECK_THROWS_AS(smooth_numbers_up_to(1, 10), DomainError);
    CHECK_THROWS_AS(smooth_numbers_up_to(2, 0), DomainError);
}

TEST_CASE("smooth_numbers_up_to equals filtering [1, N]") {
    const uint64_t n_max = 10'000;
    for (uint64_t y : {2, 3, 5, 7, 11, 47, 97}) {
        std::vector<uint64_t> expected;
        for (uint64_t n = 1; n <= n_max; ++n) {
            if (oracle::smooth(n, y)) expected.push_back(n);
        }
        CHECK(smooth_numbers_up_to(y, n_max) == expected);
    }
}

TEST_CASE("smooth_numbers_up_to is monotone in y") {
    std::vector<uint64_t> previous;
    for (uint64_t y = 2; y <= 60; ++y) {
        std::vector<uint64_t> cur = smooth_numbers_up_to(y, 5000);
        REQUIRE(std::includes(cur.begin(), cur.end(), previous.begin(), previous.end()));
        previous = std::move(cur);
    }
}

TEST_CASE("smooth_numbers_up_to respects the memory budget") {
    EnvGuard guard("SMOOTHGAP_MEM_BUDGET", "800");
    CHECK_THROWS_AS(smooth_numbers_up_to(47, 1'000'000), CapacityError);
}

}  // TEST_SUITE
