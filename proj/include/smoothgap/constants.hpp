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
#include <functional>
#include <optional>
#include <vector>

#include "smoothgap/tuples.hpp"

namespace smoothgap {

/// Partial Euler product of the Hardy-Littlewood singular series.
struct SingularSeriesEstimate {
    double value = 0.0;
    uint64_t k = 0;
    uint64_t prime_cutoff = 0;
    /// Heuristic size of log(omitted tail product); not a rigorous bound.
    double tail_magnitude = 0.0;
    bool admissible = true;
    /// First prime p <= cutoff with v_p = p, when not admissible.
    std::optional<uint64_t> obstruction;
};

/// Cutoff used by hl_prediction when none is given.
inline constexpr uint64_t kDefaultSeriesCutoff = 1'000'000;

/// Product over primes p <= prime_cutoff of (1 - v_p/p) / (1 - 1/p)^k,
/// summed in log space. Requires prime_cutoff >= k and > diameter(H), so
/// every prime where v_p < k is inside the product; throws PreconditionError
/// otherwise.
SingularSeriesEstimate singular_series(const IntegerTuple& tuple, uint64_t prime_cutoff);

/// Same product with v_p supplied by the caller.
SingularSeriesEstimate singular_series(const IntegerTuple& tuple, uint64_t prime_cutoff,
                                       const std::function<uint64_t(uint64_t)>& coverage);

enum class HlForm {
    /// G x / (log x)^k
    kRatio,
    /// G * integral from 2 to x of dt / (log t)^k
    kIntegral,
};

/// Integral from 2 to x of dt / (log t)^k by adaptive Gauss-Kronrod.
double log_power_integral(double x, uint64_t k);

/// Predicted number of n < x with n + H entirely prime. Zero for
/// non-admissible H; throws DomainError for x <= 2.
double hl_prediction(const SingularSeriesEstimate& series, double x, HlForm form);
double hl_prediction(const IntegerTuple& tuple, double x, HlForm form, uint64_t prime_cutoff = 0);

struct KmEntry {
    uint64_t m = 0;
    uint64_t k_m = 0;
    /// Largest prime <= k_m.
    uint64_t y_m = 0;
    /// Holds only under the Elliott-Halberstam conjecture.
    bool conditional = false;
};

/// Lowest known k_m for m = 2..6, plus the conditional k_2 = 5.
std::vector<KmEntry> km_table();

}  // namespace smoothgap
