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

#include <optional>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "smoothgap/errors.hpp"
#include "smoothgap/search.hpp"

using namespace smoothgap;

namespace {

std::vector<int64_t> to_i64s(const IntegerTuple& t) {
    std::vector<int64_t> out;
    for (const BigInt& x : t.elements()) out.push_back(to_i64(x));
    return out;
}

bool same_result(const SearchResult& a, const SearchResult& b) {
    return a.tuple == b.tuple && a.diameter == b.diameter && a.nodes_explored == b.nodes_explored &&
           a.proven_minimal == b.proven_minimal && a.budget_exhausted == b.budget_exhausted &&
           a.impossible_below_prime == b.impossible_below_prime;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("admissible search examples") {
    SearchResult r2 = search_min_diameter_admissible(2, 1000);
    CHECK(*r2.tuple == IntegerTuple::of({0, 2}));
    CHECK(*r2.diameter == 2);
    CHECK(r2.proven_minimal);
    CHECK_FALSE(r2.budget_exhausted);

    SearchResult r3 = search_min_diameter_admissible(3, 1000);
    CHECK(*r3.tuple == IntegerTuple::of({0, 2, 6}));
    CHECK(r3.proven_minimal);

    SearchResult r5 = search_min_diameter_admissible(5, 100000);
    CHECK(*r5.tuple == IntegerTuple::of({0, 2, 6, 8, 12}));
    CHECK(r5.proven_minimal);

    CHECK_THROWS_AS(search_min_diameter_admissible(1, 10), DomainError);
}

TEST_CASE("difference-smooth search examples") {
    SearchResult a = search_min_diameter_difference_smooth(2, 2, 1000);
    CHECK(*a.tuple == IntegerTuple::of({0, 2}));
    CHECK(a.proven_minimal);

    SearchResult b = search_min_diameter_difference_smooth(3, 2, 1000);
    CHECK_FALSE(b.tuple);
    CHECK(b.proven_minimal);
    CHECK(*b.impossible_below_prime == 3);
    CHECK(b.nodes_explored == 0);

    SearchResult c = search_min_diameter_difference_smooth(3, 3, 1000);
    CHECK(*c.tuple == IntegerTuple::of({0, 2, 6}));
    CHECK(*c.diameter == 6);
    CHECK(c.proven_minimal);

    SearchResult d = search_min_diameter_difference_smooth(50, 43, 1000);
    CHECK_FALSE(d.tuple);
    CHECK(*d.impossible_below_prime == 47);
}

TEST_CASE("searches agree with exhaustive enumeration for k <= 5") {
    for (int k = 2; k <= 5; ++k) {
        CAPTURE(k);
        auto expected = oracle::min_tuple(k, std::nullopt, 50);
        REQUIRE(expected);
        SearchResult r = search_min_diameter_admissible(k, 10'000'000);
        REQUIRE(r.tuple);
        CHECK(r.proven_minimal);
        CHECK(to_i64s(*r.tuple) == *expected);
        for (uint64_t y : {2, 3, 5, 7}) {
            CAPTURE(y);
            auto exp_y = oracle::min_tuple(k, y, 50);
            SearchResult s = search_min_diameter_difference_smooth(k, y, 10'000'000);
            CHECK(s.proven_minimal);
            if (!exp_y) {
                CHECK_FALSE(s.tuple);
                CHECK(s.impossible_below_prime);
            } else {
                REQUIRE(s.tuple);
                CHECK(to_i64s(*s.tuple) == *exp_y);
                CHECK(*s.diameter >= *r.diameter);
            }
        }
    }
}

TEST_CASE("search results verify independently") {
    for (uint64_t k = 2; k <= 8; ++k) {
        SearchResult r = search_min_diameter_admissible(k, 1'000'000);
        REQUIRE(r.tuple);
        CHECK(oracle::admissible(to_i64s(*r.tuple)));
        CHECK(r.tuple->front() == 0);
        CHECK(diameter(*r.tuple) == *r.diameter);
        for (uint64_t y : {7, 11}) {
            SearchResult s = search_min_diameter_difference_smooth(k, y, 1'000'000);
            if (!s.tuple) continue;
            CHECK(oracle::admissible(to_i64s(*s.tuple)));
            CHECK(oracle::difference_smooth(to_i64s(*s.tuple), y));
            if (r.proven_minimal && s.proven_minimal) CHECK(*s.diameter >= *r.diameter);
        }
    }
}

TEST_CASE("known minimal diameters") {
    // smallest admissible diameters for k = 2..10
    const int expected[] = {2, 6, 8, 12, 16, 20, 26, 30, 32};
    for (uint64_t k = 2; k <= 10; ++k) {
        SearchResult r = search_min_diameter_admissible(k, 10'000'000);
        CAPTURE(k);
        CHECK(r.proven_minimal);
        CHECK(*r.diameter == expected[k - 2]);
    }
}

TEST_CASE("budget exhaustion is reported, not thrown") {
    SearchResult r = search_min_diameter_admissible(30, 50);
    REQUIRE(r.tuple);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.proven_minimal);
    CHECK(is_admissible(*r.tuple).admissible);
    CHECK(r.nodes_explored <= 50);

    SearchResult s = search_min_diameter_difference_smooth(12, 11, 10);
    REQUIRE(s.tuple);
    CHECK(s.budget_exhausted);
    CHECK(is_admissible(*s.tuple).admissible);
    CHECK(is_difference_smooth(*s.tuple, 11).smooth);
}

TEST_CASE("k = 50 stays within the consecutive-prime baseline") {
    SearchResult r = search_min_diameter_admissible(50, 1'000'000);
    REQUIRE(r.tuple);
    CHECK(r.tuple->size() == 50);
    CHECK(*r.diameter <= 260);
    CHECK(oracle::admissible(to_i64s(*r.tuple)));
}

TEST_CASE("searches are deterministic") {
    CHECK(same_result(search_min_diameter_admissible(9, 100000), search_min_diameter_admissible(9, 100000)));
    CHECK(same_result(search_min_diameter_admissible(40, 5000), search_min_diameter_admissible(40, 5000)));
    CHECK(same_result(search_min_diameter_difference_smooth(6, 5, 100000),
                      search_min_diameter_difference_smooth(6, 5, 100000)));
}

}  // TEST_SUITE
