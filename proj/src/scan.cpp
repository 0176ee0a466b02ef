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

#include "smoothgap/scan.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "smoothgap/errors.hpp"
#include "smoothgap/memory.hpp"
#include "smoothgap/primes.hpp"
#include "smoothgap/smoothness.hpp"

namespace smoothgap {

namespace {

uint64_t isqrt(uint64_t n) {
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void require_range(uint64_t largest, std::string_view what) {
    if (largest > kMaxScanBound) {
        throw CapacityError(std::string(what) + " reaches " + std::to_string(largest) +
                            ", beyond the 10^12 scan guard");
    }
}

void require_segment(uint64_t segment_size) {
    if (segment_size == 0) throw DomainError("segment size must be positive");
    require_memory(segment_size / 2 + 1, "sieve segment");
}

std::vector<uint64_t> odd_base_primes(uint64_t largest) {
    PrimeTable table = sieve_primes(isqrt(largest));
    auto primes = table.primes();
    if (primes.empty()) return {};
    return {primes.begin() + 1, primes.end()};
}

// flags[j] is set iff first_odd + 2j is prime, for odd numbers in [lo, hi).
uint64_t sieve_odd_segment(uint64_t lo, uint64_t hi, std::span<const uint64_t> odd_base,
                           std::vector<uint8_t>& flags) {
    const uint64_t first_odd = lo | 1;
    const uint64_t count = hi > first_odd ? (hi - first_odd + 1) / 2 : 0;
    flags.assign(count, 1);
    if (count == 0) return first_odd;
    if (first_odd == 1) flags[0] = 0;
    for (uint64_t p : odd_base) {
        if (p * p >= hi) break;
        uint64_t start = std::max(p * p, (first_odd + p - 1) / p * p);
        if ((start & 1) == 0) start += p;
        for (uint64_t m = start; m < hi; m += 2 * p) flags[(m - first_odd) / 2] = 0;
    }
    return first_odd;
}

unsigned worker_count(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Run fn(t) for t in [0, n) on up to n threads.
template <typename Fn>
void parallel_for(unsigned n, Fn&& fn) {
    if (n <= 1) {
        fn(0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back([&fn, t] { fn(t); });
    for (auto& th : pool) th.join();
}

std::vector<uint64_t> normalized_checkpoints(const ScanRequest& req) {
    std::vector<uint64_t> cps = req.checkpoints;
    if (cps.empty()) cps.push_back(req.x_max);
    for (std::size_t i = 1; i < cps.size(); ++i) {
        if (cps[i] <= cps[i - 1]) throw DomainError("checkpoints must be strictly ascending");
    }
    if (cps.back() != req.x_max) throw DomainError("the last checkpoint must equal x_max");
    return cps;
}

std::vector<uint64_t> validate(const ScanRequest& req, ScanMode mode) {
    if (req.mode != mode) throw PreconditionError("scan request has the wrong mode");
    if (req.x_max < 1) throw DomainError("x_max must be positive");
    require_range(req.x_max, "x_max");
    if (mode == ScanMode::kTupleTranslates) {
        if (!req.tuple || req.y) throw DomainError("tuple-translate scans take a tuple and no y");
    } else {
        if (!req.y || req.tuple) throw DomainError("pair scans take y and no tuple");
        if (*req.y < 2) throw DomainError("y must be >= 2");
    }
    return normalized_checkpoints(req);
}

// Split [lo, hi) into n contiguous pieces.
std::pair<uint64_t, uint64_t> chunk(uint64_t lo, uint64_t hi, unsigned n, unsigned t) {
    const uint64_t len = hi > lo ? hi - lo : 0;
    const uint64_t step = (len + n - 1) / n;
    uint64_t a = std::min(hi, lo + step * t);
    uint64_t b = std::min(hi, a + step);
    return {a, b};
}

struct ChunkTally {
    std::vector<uint64_t> buckets;
    std::vector<uint64_t> at_least_buckets;
    std::vector<std::vector<uint64_t>> witnesses;
};

ScanReport assemble(const ScanRequest& req, const std::vector<uint64_t>& cps, std::vector<ChunkTally>& tallies) {
    ScanReport report;
    report.request = req;
    report.request.checkpoints = cps;
    report.records.resize(cps.size());
    uint64_t running = 0;
    uint64_t running_m = 0;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        for (const auto& t : tallies) {
            running += t.buckets[i];
            if (!t.at_least_buckets.empty()) running_m += t.at_least_buckets[i];
        }
        report.records[i].checkpoint = cps[i];
        report.records[i].count = running;
        if (req.at_least_m && req.mode == ScanMode::kTupleTranslates) report.records[i].at_least_m_count = running_m;
    }
    // chunks are in increasing order, so concatenation is already sorted
    for (auto& t : tallies) {
        for (auto& w : t.witnesses) {
            if (report.witnesses.size() == kMaxWitnesses) break;
            report.witnesses.push_back(std::move(w));
        }
    }
    return report;
}

}  // namespace

void segmented_sieve(uint64_t lo, uint64_t hi, uint64_t segment_size,
                     const std::function<void(uint64_t)>& emit) {
    require_segment(segment_size);
    if (hi <= lo) return;
    require_range(hi - 1, "sieve range");
    const std::vector<uint64_t> base = odd_base_primes(hi - 1);
    if (lo <= 2 && 2 < hi) emit(2);
    std::vector<uint8_t> flags;
    for (uint64_t a = lo; a < hi;) {
        const uint64_t b = hi - a > segment_size ? a + segment_size : hi;
        const uint64_t first = sieve_odd_segment(a, b, base, flags);
        for (std::size_t j = 0; j < flags.size(); ++j) {
            if (flags[j]) emit(first + 2 * j);
        }
        a = b;
    }
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi, uint64_t segment_size) {
    std::vector<uint64_t> out;
    segmented_sieve(lo, hi, segment_size, [&](uint64_t p) { out.push_back(p); });
    return out;
}

PrimeBitset::PrimeBitset(uint64_t limit, uint64_t segment_size, unsigned threads) : limit_(limit) {
    require_segment(segment_size);
    require_range(limit, "prime bitmap");
    const uint64_t words = (limit / 2 + 1 + 63) / 64;
    require_memory(words * 8, "prime bitmap");
    bits_.assign(words, 0);

    // segments start on multiples of 128 so each owns whole words
    const uint64_t seg = (segment_size + 127) / 128 * 128;
    const uint64_t end = limit + 1;
    const uint64_t nseg = (end + seg - 1) / seg;
    const std::vector<uint64_t> base = odd_base_primes(limit);
    const unsigned workers = static_cast<unsigned>(std::min<uint64_t>(worker_count(threads), std::max<uint64_t>(nseg, 1)));

    parallel_for(workers, [&](unsigned t) {
        std::vector<uint8_t> flags;
        for (uint64_t s = t; s < nseg; s += workers) {
            const uint64_t a = s * seg;
            const uint64_t b = std::min(end, a + seg);
            const uint64_t first = sieve_odd_segment(a, b, base, flags);
            for (std::size_t j = 0; j < flags.size(); ++j) {
                if (!flags[j]) continue;
                const uint64_t i = (first + 2 * j) >> 1;
                bits_[i >> 6] |= uint64_t{1} << (i & 63);
            }
        }
    });
}

uint64_t PrimeBitset::next_prime(uint64_t n) const {
    for (uint64_t m = n; m <= limit_; ++m) {
        if (test(m)) return m;
    }
    return 0;
}

ScanReport count_smooth_gap_pairs(const ScanRequest& req, const ScanOptions& opt) {
    const std::vector<uint64_t> cps = validate(req, ScanMode::kPairs);
    const uint64_t x = req.x_max;
    const unsigned workers = worker_count(opt.threads);
    const PrimeBitset bits(x, opt.segment_size, workers);
    const SmoothnessTester tester(*req.y);

    std::vector<uint64_t> even_gaps;
    for (uint64_t s : smooth_numbers_up_to(*req.y, x)) {
        if ((s & 1) == 0) even_gaps.push_back(s);
    }

    std::vector<ChunkTally> tallies(workers);
    parallel_for(workers, [&](unsigned t) {
        auto [lo, hi] = chunk(3, x + 1, workers, t);
        ChunkTally& tally = tallies[t];
        tally.buckets.assign(cps.size(), 0);
        std::vector<uint64_t> smaller;
        for (uint64_t p = lo | 1; p < hi; p += 2) {
            if (!bits.test(p)) continue;
            const std::size_t bucket = static_cast<std::size_t>(std::lower_bound(cps.begin(), cps.end(), p) - cps.begin());
            const bool sample = tally.witnesses.size() < kMaxWitnesses;
            smaller.clear();
            uint64_t found = 0;
            // q = 2 is the only partner at odd distance
            const uint64_t to_two = p - 2;
            if (to_two == 1 ? req.include_gap_one : tester.is_smooth(to_two)) {
                ++found;
                if (sample) smaller.push_back(2);
            }
            for (uint64_t s : even_gaps) {
                if (s + 2 >= p) break;
                if (bits.test(p - s)) {
                    ++found;
                    if (sample) smaller.push_back(p - s);
                }
            }
            tally.buckets[bucket] += found;
            if (sample) {
                std::sort(smaller.begin(), smaller.end());
                for (uint64_t q : smaller) {
                    if (tally.witnesses.size() == kMaxWitnesses) break;
                    tally.witnesses.push_back({q, p});
                }
            }
        }
    });
    return assemble(req, cps, tallies);
}

ScanReport count_consecutive_smooth_gap_pairs(const ScanRequest& req, const ScanOptions& opt) {
    const std::vector<uint64_t> cps = validate(req, ScanMode::kConsecutivePairs);
    require_segment(opt.segment_size);
    const uint64_t end = req.x_max + 1;
    const std::vector<uint64_t> base = odd_base_primes(req.x_max);
    const SmoothnessTester tester(*req.y);
    const unsigned workers = worker_count(opt.threads);
    const uint64_t seg = opt.segment_size;

    auto gap_counts = [&](uint64_t gap) { return gap == 1 ? req.include_gap_one : tester.is_smooth(gap); };

    struct Summary {
        uint64_t first = 0;
        uint64_t last = 0;
        // (bucket, count) runs for gaps inside the segment
        std::vector<std::pair<std::size_t, uint64_t>> runs;
        std::vector<std::vector<uint64_t>> witnesses;
    };

    ChunkTally total;
    total.buckets.assign(cps.size(), 0);
    uint64_t previous = 0;
    auto record = [&](uint64_t q, uint64_t p, std::size_t bucket) {
        total.buckets[bucket] += 1;
        if (total.witnesses.size() < kMaxWitnesses) total.witnesses.push_back({q, p});
    };

    const uint64_t nseg = (end + seg - 1) / seg;
    std::vector<Summary> batch(workers);
    for (uint64_t s0 = 0; s0 < nseg; s0 += workers) {
        const unsigned in_batch = static_cast<unsigned>(std::min<uint64_t>(workers, nseg - s0));
        parallel_for(in_batch, [&](unsigned t) {
            Summary& sum = batch[t];
            sum = Summary{};
            const uint64_t a = (s0 + t) * seg;
            const uint64_t b = std::min(end, a + seg);
            std::vector<uint8_t> flags;
            const uint64_t first_odd = sieve_odd_segment(a, b, base, flags);
            uint64_t prev = (a <= 2 && 2 < b) ? 2 : 0;
            if (prev) sum.first = 2;
            for (std::size_t j = 0; j < flags.size(); ++j) {
                if (!flags[j]) continue;
                const uint64_t p = first_odd + 2 * j;
                if (prev == 0) {
                    sum.first = p;
                } else if (gap_counts(p - prev)) {
                    const std::size_t bucket = static_cast<std::size_t>(std::lower_bound(cps.begin(), cps.end(), p) - cps.begin());
                    if (!sum.runs.empty() && sum.runs.back().first == bucket) {
                        ++sum.runs.back().second;
                    } else {
                        sum.runs.emplace_back(bucket, 1);
                    }
                    if (sum.witnesses.size() < kMaxWitnesses) sum.witnesses.push_back({prev, p});
                }
                prev = p;
            }
            sum.last = prev;
        });
        for (unsigned t = 0; t < in_batch; ++t) {
            Summary& sum = batch[t];
            if (sum.first == 0) continue;
            // the gap that straddles the segment boundary comes first in order
            if (previous != 0 && gap_counts(sum.first - previous)) {
                record(previous, sum.first,
                       static_cast<std::size_t>(std::lower_bound(cps.begin(), cps.end(), sum.first) - cps.begin()));
            }
            for (auto [bucket, count] : sum.runs) total.buckets[bucket] += count;
            for (auto& w : sum.witnesses) {
                if (total.witnesses.size() == kMaxWitnesses) break;
                total.witnesses.push_back(std::move(w));
            }
            previous = sum.last;
        }
    }
    std::vector<ChunkTally> tallies;
    tallies.push_back(std::move(total));
    return assemble(req, cps, tallies);
}

ScanReport count_tuple_translates(const ScanRequest& req, const ScanOptions& opt) {
    const std::vector<uint64_t> cps = validate(req, ScanMode::kTupleTranslates);
    const IntegerTuple& tuple = *req.tuple;
    for (const BigInt& h : tuple.elements()) {
        if (!fits_i64(h) || abs(h) > from_u64(kMaxScanBound)) {
            throw CapacityError("tuple element " + to_string(h) + " is outside the scan range");
        }
    }
    const int64_t h0 = to_i64(tuple.front());
    const int64_t h_last = to_i64(tuple.back());
    std::vector<int64_t> h;
    for (const BigInt& e : tuple.elements()) h.push_back(to_i64(e));
    const uint64_t x = req.x_max;
    // largest value probed is (x - 1) + h_last
    const int64_t top = static_cast<int64_t>(x - 1) + h_last;
    const uint64_t limit = top < 2 ? 2 : static_cast<uint64_t>(top);
    const unsigned workers = worker_count(opt.threads);
    const PrimeBitset bits(limit, opt.segment_size, workers);

    auto prime_at = [&](int64_t v) { return v >= 2 && bits.test(static_cast<uint64_t>(v)); };

    std::vector<ChunkTally> tallies(workers);
    parallel_for(workers, [&](unsigned t) {
        auto [lo, hi] = chunk(1, x, workers, t);
        ChunkTally& tally = tallies[t];
        tally.buckets.assign(cps.size(), 0);
        if (req.at_least_m) tally.at_least_buckets.assign(cps.size(), 0);
        for (uint64_t n = lo; n < hi; ++n) {
            const int64_t base = static_cast<int64_t>(n);
            std::size_t hits = 0;
            bool all = prime_at(base + h0);
            if (req.at_least_m) {
                for (int64_t e : h) hits += prime_at(base + e) ? 1 : 0;
                all = hits == h.size();
            } else if (all) {
                for (std::size_t i = 1; i < h.size() && all; ++i) all = prime_at(base + h[i]);
            }
            if (!all && !(req.at_least_m && hits >= *req.at_least_m)) continue;
            const std::size_t bucket = static_cast<std::size_t>(std::upper_bound(cps.begin(), cps.end(), n) - cps.begin());
            if (req.at_least_m && hits >= *req.at_least_m) ++tally.at_least_buckets[bucket];
            if (!all) continue;
            ++tally.buckets[bucket];
            if (tally.witnesses.size() < kMaxWitnesses) {
                std::vector<uint64_t> w;
                for (int64_t e : h) w.push_back(static_cast<uint64_t>(base + e));
                tally.witnesses.push_back(std::move(w));
            }
        }
    });
    ScanReport report = assemble(req, cps, tallies);

    uint64_t cutoff = opt.series_cutoff;
    if (cutoff == 0) {
        cutoff = std::max<uint64_t>({kDefaultSeriesCutoff, static_cast<uint64_t>(h_last - h0) + 1, tuple.size()});
    }
    report.series = singular_series(tuple, cutoff);
    for (CheckpointRecord& rec : report.records) {
        if (rec.checkpoint <= 2) continue;
        const double cp = static_cast<double>(rec.checkpoint);
        rec.hl_ratio_prediction = hl_prediction(*report.series, cp, HlForm::kRatio);
        rec.hl_integral_prediction = hl_prediction(*report.series, cp, HlForm::kIntegral);
        if (*rec.hl_integral_prediction > 0.0) {
            rec.ratio = static_cast<double>(rec.count) / *rec.hl_integral_prediction;
        }
    }
    return report;
}

ScanReport run_scan(const ScanRequest& req, const ScanOptions& opt) {
    switch (req.mode) {
        case ScanMode::kPairs:
            return count_smooth_gap_pairs(req, opt);
        case ScanMode::kConsecutivePairs:
            return count_consecutive_smooth_gap_pairs(req, opt);
        case ScanMode::kTupleTranslates:
            return count_tuple_translates(req, opt);
    }
    throw DomainError("unknown scan mode");
}

}  // namespace smoothgap
