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
#include <span>
#include <vector>

#include "smoothgap/constants.hpp"
#include "smoothgap/tuples.hpp"

namespace smoothgap {

/// Hard ceiling on scan and sieve ranges.
inline constexpr uint64_t kMaxScanBound = 1'000'000'000'000ULL;
inline constexpr uint64_t kDefaultSegmentSize = uint64_t{1} << 18;
inline constexpr std::size_t kMaxWitnesses = 100;

/// Calls `emit` for every prime in [lo, hi), ascending. Base primes go up to
/// sqrt(hi); each segment covers `segment_size` integers.
void segmented_sieve(uint64_t lo, uint64_t hi, uint64_t segment_size,
                     const std::function<void(uint64_t)>& emit);

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi,
                                      uint64_t segment_size = kDefaultSegmentSize);

/// Primality bitmap over [0, limit], odd numbers only, filled segment by
/// segment across up to `threads` workers.
class PrimeBitset {
  public:
    PrimeBitset(uint64_t limit, uint64_t segment_size = kDefaultSegmentSize, unsigned threads = 1);

    uint64_t limit() const noexcept { return limit_; }

    bool test(uint64_t n) const {
        if (n > limit_) return false;
        if ((n & 1) == 0) return n == 2;
        const uint64_t i = n >> 1;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    /// Smallest prime >= n, or 0 if none up to limit().
    uint64_t next_prime(uint64_t n) const;

  private:
    uint64_t limit_;
    std::vector<uint64_t> bits_;
};

enum class ScanMode { kPairs, kConsecutivePairs, kTupleTranslates };

struct ScanRequest {
    ScanMode mode = ScanMode::kPairs;
    uint64_t x_max = 0;
    /// Pair modes.
    std::optional<uint64_t> y;
    /// Translate mode.
    std::optional<IntegerTuple> tuple;
    /// Ascending, ending at x_max. Empty means {x_max}.
    std::vector<uint64_t> checkpoints;
    bool include_gap_one = true;
    /// Translate mode: also count n with at least m primes among n + H.
    std::optional<uint64_t> at_least_m;
};

/// Execution knobs. Reports do not depend on them.
struct ScanOptions {
    uint64_t segment_size = kDefaultSegmentSize;
    /// 0 means one worker per hardware thread.
    unsigned threads = 1;
    /// Singular series cutoff; 0 picks max(10^6, diameter + 1).
    uint64_t series_cutoff = 0;
};

struct CheckpointRecord {
    uint64_t checkpoint = 0;
    uint64_t count = 0;
    std::optional<double> hl_ratio_prediction;
    std::optional<double> hl_integral_prediction;
    /// count / integral-form prediction, when that prediction is positive.
    std::optional<double> ratio;
    std::optional<uint64_t> at_least_m_count;
};

struct ScanReport {
    ScanRequest request;
    std::vector<CheckpointRecord> records;
    /// Earliest hits: [q, p] for pair modes (ordered by p, then q), the
    /// primes n + H for translates (ordered by n).
    std::vector<std::vector<uint64_t>> witnesses;
    std::optional<SingularSeriesEstimate> series;
};

/// Ordered prime pairs p > q, both <= checkpoint, with p - q y-smooth.
ScanReport count_smooth_gap_pairs(const ScanRequest& request, const ScanOptions& options = {});

/// Adjacent primes (q, p) with p <= checkpoint and p - q y-smooth.
ScanReport count_consecutive_smooth_gap_pairs(const ScanRequest& request,
                                              const ScanOptions& options = {});

/// 1 <= n < checkpoint with n + h prime for every h in the tuple.
ScanReport count_tuple_translates(const ScanRequest& request, const ScanOptions& options = {});

/// Dispatch on request.mode.
ScanReport run_scan(const ScanRequest& request, const ScanOptions& options = {});

}  // namespace smoothgap
