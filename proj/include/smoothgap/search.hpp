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

#include "smoothgap/tuples.hpp"

namespace smoothgap {

struct SearchResult {
    /// Canonical (least element 0); absent when no tuple satisfies the constraints.
    std::optional<IntegerTuple> tuple;
    std::optional<BigInt> diameter;
    uint64_t nodes_explored = 0;
    /// Every diameter below the returned one was ruled out (or, with no
    /// tuple, the constraints were certified unsatisfiable).
    bool proven_minimal = false;
    bool budget_exhausted = false;
    /// Set when the result is absent because y < z_k; holds z_k.
    std::optional<uint64_t> impossible_below_prime;
};

/// Smallest-diameter admissible k-tuple, lexicographically smallest among
/// ties. A greedy residue sieve and the consecutive-prime tuple seed an
/// upper bound; exact depth-first search then tries every smaller diameter
/// in increasing order. `budget` caps the depth-first nodes.
SearchResult search_min_diameter_admissible(uint64_t k, uint64_t budget);

/// Smallest-diameter admissible k-tuple whose pairwise differences are all
/// y-smooth. Returns an absent tuple, certified, when y < z_k. Otherwise the
/// primorial progression is the starting incumbent and smooth diameters are
/// tried in increasing order.
SearchResult search_min_diameter_difference_smooth(uint64_t k, uint64_t y, uint64_t budget);

}  // namespace smoothgap
