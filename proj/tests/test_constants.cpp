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

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "smoothgap/constants.hpp"
#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"

using namespace smoothgap;

namespace {

IntegerTuple from_i64s(const std::vector<int64_t>& v) {
    std::vector<BigInt> b;
    for (int64_t x : v) b.push_back(from_i64(x));
    return IntegerTuple(std::move(b));
}

// Composite Simpson rule for the integral of 1/(log t)^k over [2, x], after t = e^u.
double simpson_log_power(double x, uint64_t k, int intervals) {
    const double a = std::log(2.0);
    const double b = std::log(x);
    const double h = (b - a) / intervals;
    auto f = [k](double u) { return std::exp(u) / std::pow(u, static_cast<double>(k)); };
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("non-admissible tuples give exactly zero") {
    SingularSeriesEstimate s = singular_series(IntegerTuple::of({0, 1}), 2);
    CHECK(s.value == 0.0);
    CHECK_FALSE(s.admissible);
    CHECK(*s.obstruction == 2);
    CHECK(singular_series(IntegerTuple::of({0, 1}), 1000).value == 0.0);

    SingularSeriesEstimate t = singular_series(IntegerTuple::of({0, 2, 4}), 1000);
    CHECK(t.value == 0.0);
    CHECK(*t.obstruction == 3);
    CHECK(hl_prediction(IntegerTuple::of({0, 2, 4}), 1e6, HlForm::kIntegral) == 0.0);
    CHECK(hl_prediction(IntegerTuple::of({0, 2, 4}), 1e6, HlForm::kRatio) == 0.0);
}

TEST_CASE("twin prime constant") {
    SingularSeriesEstimate s6 = singular_series(IntegerTuple::of({0, 2}), 1'000'000);
    CHECK(s6.admissible);
    CHECK(s6.k == 2);
    CHECK(s6.prime_cutoff == 1'000'000);
    CHECK(s6.value == doctest::Approx(1.3203237211802865).epsilon(1e-12));
    CHECK(std::abs(s6.value - 1.32032363169373914785562) < 1e-5);
    CHECK(s6.tail_magnitude > 0.0);
}

TEST_CASE("singular series converges and matches a direct product") {
    const auto sieve = oracle::byte_sieve(10'000'000);
    for (auto h : {std::vector<int64_t>{0, 2}, std::vector<int64_t>{0, 2, 6}}) {
        IntegerTuple t = from_i64s(h);
        const double v6 = singular_series(t, 1'000'000).value;
        const double v7 = singular_series(t, 10'000'000).value;
        CHECK(std::abs(v6 - v7) < 1e-5);
        const long double direct = oracle::singular_series_direct(h, sieve, 10'000'000);
        CHECK(std::abs(static_cast<long double>(v7) - direct) < 1e-9L);
    }
    CHECK(singular_series(IntegerTuple::of({0, 2, 6}), 1'000'000).value ==
          doctest::Approx(2.858249176880971).epsilon(1e-12));
}

TEST_CASE("cutoff preconditions") {
    CHECK_THROWS_AS(singular_series(IntegerTuple::of({0, 2, 6}), 2), PreconditionError);
    CHECK_THROWS_AS(singular_series(IntegerTuple::of({0, 100}), 100), PreconditionError);
    CHECK_NOTHROW(singular_series(IntegerTuple::of({0, 100}), 101));
}

TEST_CASE("singular series properties on random tuples") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> kdist(2, 8);
    auto brute_coverage = [](const std::vector<int64_t>& h) {
        return [h](uint64_t p) -> uint64_t {
            std::set<int64_t> classes;
            const auto q = static_cast<int64_t>(p);
            for (int64_t x : h) classes.insert(((x % q) + q) % q);
            return classes.size();
        };
    };
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int64_t> h = oracle::random_admissible(rng, kdist(rng), 100);
        IntegerTuple t = from_i64s(h);
        const uint64_t cutoff = 2000;
        SingularSeriesEstimate s = singular_series(t, cutoff);
        REQUIRE(s.admissible);
        REQUIRE(s.value > 0.0);

        // translation invariance
        REQUIRE(singular_series(t.translated(BigInt(-12345)), cutoff).value == s.value);
        REQUIRE(singular_series(t.translated(BigInt("98765432109876543210")), cutoff).value == s.value);

        // full residue enumeration leaves the value bit-identical
        REQUIRE(singular_series(t, cutoff, brute_coverage(h)).value == s.value);

        // doubling the cutoff moves log(value) by less than the reported tail
        SingularSeriesEstimate d = singular_series(t, 2 * cutoff);
        REQUIRE(std::abs(std::log(d.value) - std::log(s.value)) < s.tail_magnitude);
    }
}

TEST_CASE("HL predictions for twin primes") {
    SingularSeriesEstimate s = singular_series(IntegerTuple::of({0, 2}), 1'000'000);
    const double ratio = hl_prediction(s, 1e7, HlForm::kRatio);
    CHECK(ratio == doctest::Approx(s.value * 1e7 / std::pow(std::log(1e7), 2)).epsilon(1e-14));
    CHECK(ratio == doctest::Approx(50822.14).epsilon(1e-6));
    const double integral = hl_prediction(s, 1e7, HlForm::kIntegral);
    CHECK(integral == doctest::Approx(58753.82).epsilon(1e-6));
    CHECK(std::abs(58980.0 / integral - 1.0) < 0.01);
    CHECK(hl_prediction(IntegerTuple::of({0, 2}), 1e7, HlForm::kIntegral) == integral);
    CHECK(hl_prediction(IntegerTuple::of({0, 2, 6}), 1e6, HlForm::kIntegral) == doctest::Approx(1446.17).epsilon(1e-5));
    CHECK_THROWS_AS(hl_prediction(s, 2.0, HlForm::kRatio), DomainError);
    CHECK_THROWS_AS(hl_prediction(IntegerTuple::of({0, 2}), 1.5, HlForm::kIntegral), DomainError);
}

TEST_CASE("log_power_integral matches Simpson quadrature") {
    for (uint64_t k : {1, 2, 3, 6}) {
        for (double x : {3.0, 100.0, 1e4, 1e7, 1e10}) {
            CAPTURE(k);
            CAPTURE(x);
            CHECK(log_power_integral(x, k) == doctest::Approx(simpson_log_power(x, k, 200000)).epsilon(1e-9));
        }
    }
    CHECK(log_power_integral(1e7, 2) == doctest::Approx(44499.557).epsilon(1e-7));
    CHECK_THROWS_AS(log_power_integral(2.0, 2), DomainError);
}

TEST_CASE("km table") {
    std::vector<KmEntry> table = km_table();
    REQUIRE(table.size() == 6);
    const uint64_t ms[] = {2, 3, 4, 5, 6};
    const uint64_t ks[] = {50, 35265, 1624545, 73807570, 3340375663ULL};
    const uint64_t ys[] = {47, 35257, 1624529, 73807561, 3340375637ULL};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(table[i].m == ms[i]);
        CHECK(table[i].k_m == ks[i]);
        CHECK(table[i].y_m == ys[i]);
        CHECK_FALSE(table[i].conditional);
    }
    CHECK(table[5].m == 2);
    CHECK(table[5].k_m == 5);
    CHECK(table[5].y_m == 5);
    CHECK(table[5].conditional);
    for (const KmEntry& e : table) {
        CHECK(is_prime(e.y_m));
        CHECK(e.y_m <= e.k_m);
        for (uint64_t n = e.y_m + 1; n <= e.k_m; ++n) CHECK_FALSE(is_prime(n));
    }
}

}  // TEST_SUITE
