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

#include "smoothgap/search.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"
#include "smoothgap/smoothness.hpp"

namespace smoothgap {

namespace {

enum class Outcome { kFound, kNone, kOutOfBudget };

// Depth-first search for the lexicographically smallest admissible tuple
// 0 = h_0 < h_1 < ... < h_{k-1} = D with interior elements drawn from a pool.
class FixedDiameterSearch {
  public:
    FixedDiameterSearch(uint64_t k, const SmoothnessTester* tester, uint64_t budget, uint64_t& nodes)
        : k_(k), tester_(tester), budget_(budget), nodes_(nodes) {
        PrimeTable table = sieve_primes(k);
        primes_.assign(table.primes().begin(), table.primes().end());
        offsets_.resize(primes_.size());
        uint64_t total = 0;
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            offsets_[i] = total;
            total += primes_[i];
        }
        counts_.assign(total, 0);
        covered_.assign(primes_.size(), 0);
    }

    /// `pool` is ascending; only entries in (0, D) are used.
    Outcome run(uint64_t diameter, std::span<const uint64_t> pool) {
        found_.clear();
        std::fill(counts_.begin(), counts_.end(), 0);
        std::fill(covered_.begin(), covered_.end(), 0);

        ++nodes_;
        if (nodes_ > budget_) return Outcome::kOutOfBudget;
        chosen_.assign({0});
        if (!add(0)) return Outcome::kNone;
        if (k_ == 1) {
            found_ = chosen_;
            return Outcome::kFound;
        }
        if (!compatible(diameter) || !add(diameter)) return Outcome::kNone;
        chosen_.push_back(diameter);

        // Interior candidates that agree with both endpoints.
        candidates_.clear();
        for (uint64_t x : pool) {
            if (x == 0) continue;
            if (x >= diameter) break;
            if (tester_ != nullptr && !tester_->is_smooth(diameter - x)) continue;
            if (!compatible(x)) continue;
            candidates_.push_back(x);
        }
        if (candidates_.size() + 2 < k_) return Outcome::kNone;
        residues_.resize(candidates_.size() * primes_.size());
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                residues_[c * primes_.size() + i] = candidates_[c] % primes_[i];
            }
        }

        Outcome out = dfs(0, k_ - 2);
        if (out == Outcome::kFound) {
            found_ = chosen_;
            std::sort(found_.begin(), found_.end());
        }
        return out;
    }

    const std::vector<uint64_t>& found() const { return found_; }

  private:
    Outcome dfs(std::size_t start, uint64_t need) {
        if (need == 0) return Outcome::kFound;
        for (std::size_t c = start; c + need <= candidates_.size(); ++c) {
            if (++nodes_ > budget_) return Outcome::kOutOfBudget;
            const uint64_t x = candidates_[c];
            if (tester_ != nullptr && !smooth_against_chosen(x)) continue;
            const uint64_t* res = &residues_[c * primes_.size()];
            if (!place(res)) continue;
            chosen_.push_back(x);
            Outcome out = dfs(c + 1, need - 1);
            if (out != Outcome::kNone) return out;
            chosen_.pop_back();
            unplace(res);
        }
        return Outcome::kNone;
    }

    bool smooth_against_chosen(uint64_t x) const {
        // chosen_[1] is D, the others are below x
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            uint64_t h = chosen_[i];
            uint64_t d = h > x ? h - x : x - h;
            if (!tester_->is_smooth(d)) return false;
        }
        return true;
    }

    // Would adding x keep every residue system incomplete?
    bool compatible(uint64_t x) const {
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            uint64_t r = x % primes_[i];
            if (counts_[offsets_[i] + r] == 0 && covered_[i] + 1 == primes_[i]) return false;
        }
        return true;
    }

    bool add(uint64_t x) {
        if (!compatible(x)) return false;
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (counts_[offsets_[i] + x % primes_[i]]++ == 0) ++covered_[i];
        }
        return true;
    }

    bool place(const uint64_t* res) {
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (counts_[offsets_[i] + res[i]] == 0 && covered_[i] + 1 == primes_[i]) return false;
        }
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (counts_[offsets_[i] + res[i]]++ == 0) ++covered_[i];
        }
        return true;
    }

    void unplace(const uint64_t* res) {
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (--counts_[offsets_[i] + res[i]] == 0) --covered_[i];
        }
    }

    uint64_t k_;
    const SmoothnessTester* tester_;
    uint64_t budget_;
    uint64_t& nodes_;
    std::vector<uint64_t> primes_;
    std::vector<uint64_t> offsets_;
    std::vector<uint32_t> counts_;
    std::vector<uint64_t> covered_;
    std::vector<uint64_t> candidates_;
    std::vector<uint64_t> residues_;
    std::vector<uint64_t> chosen_;
    std::vector<uint64_t> found_;
};

bool better(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    if (b.empty()) return true;
    if (a.back() != b.back()) return a.back() < b.back();
    return a < b;
}

// Sieve a window [start, start + width] by one residue class per prime <= k,
// always removing the class with the fewest survivors, then keep the
// narrowest run of k consecutive survivors.
std::vector<uint64_t> greedy_sieve_window(uint64_t k, std::span<const uint64_t> primes, int64_t start,
                                          uint64_t width, std::size_t zero_class_primes) {
    std::vector<int64_t> alive;
    alive.reserve(width + 1);
    for (uint64_t i = 0; i <= width; ++i) alive.push_back(start + static_cast<int64_t>(i));

    std::vector<uint64_t> tally;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const int64_t p = static_cast<int64_t>(primes[pi]);
        auto residue = [p](int64_t x) { return static_cast<uint64_t>(((x % p) + p) % p); };
        uint64_t drop = 0;
        if (pi >= zero_class_primes) {
            tally.assign(static_cast<std::size_t>(p), 0);
            for (int64_t x : alive) ++tally[residue(x)];
            drop = static_cast<uint64_t>(std::min_element(tally.begin(), tally.end()) - tally.begin());
        }
        std::erase_if(alive, [&](int64_t x) { return residue(x) == drop; });
        if (alive.size() < k) return {};
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i + k <= alive.size(); ++i) {
        if (alive[i + k - 1] - alive[i] < alive[best + k - 1] - alive[best]) best = i;
    }
    std::vector<uint64_t> out;
    out.reserve(k);
    for (std::size_t i = best; i < best + k; ++i) out.push_back(static_cast<uint64_t>(alive[i] - alive[best]));
    return out;
}

std::vector<uint64_t> heuristic_admissible(uint64_t k) {
    auto baseline = construct_consecutive_prime_tuple(k).canonical_offsets();
    std::vector<uint64_t> best = *baseline;
    PrimeTable table = sieve_primes(k);
    auto primes = table.primes();
    const uint64_t width = best.back();
    const int64_t span = static_cast<int64_t>(width);
    const int64_t step = std::max<int64_t>(1, span / 200);
    for (std::size_t zero_classes : {std::size_t{0}, std::size_t{1}}) {
        if (zero_classes > primes.size()) continue;
        for (int64_t start = -span; start <= span; start += step) {
            std::vector<uint64_t> candidate = greedy_sieve_window(k, primes, start, width, zero_classes);
            if (!candidate.empty() && better(candidate, best)) best = std::move(candidate);
        }
    }
    return best;
}

void require_k(uint64_t k) {
    if (k < 2) throw DomainError("tuple searches require k >= 2, got " + std::to_string(k));
}

SearchResult make_result(const std::vector<uint64_t>& offsets) {
    SearchResult r;
    r.tuple = IntegerTuple::of(std::span<const uint64_t>(offsets));
    r.diameter = from_u64(offsets.back());
    return r;
}

}  // namespace

SearchResult search_min_diameter_admissible(uint64_t k, uint64_t budget) {
    require_k(k);
    const std::vector<uint64_t> incumbent = heuristic_admissible(k);
    const uint64_t upper = incumbent.back();

    std::vector<uint64_t> pool(upper);
    for (uint64_t i = 0; i < upper; ++i) pool[i] = i;

    uint64_t nodes = 0;
    FixedDiameterSearch dfs(k, nullptr, budget, nodes);
    for (uint64_t d = k - 1; d <= upper; ++d) {
        Outcome out = dfs.run(d, pool);
        if (out == Outcome::kOutOfBudget) {
            SearchResult r = make_result(incumbent);
            r.nodes_explored = std::min(nodes, budget);
            r.budget_exhausted = true;
            return r;
        }
        if (out == Outcome::kFound) {
            SearchResult r = make_result(dfs.found());
            r.nodes_explored = nodes;
            r.proven_minimal = true;
            return r;
        }
    }
    // the incumbent has diameter `upper`, so the loop always finds it
    throw std::logic_error("admissible search missed its own incumbent");
}

SearchResult search_min_diameter_difference_smooth(uint64_t k, uint64_t y, uint64_t budget) {
    require_k(k);
    if (y < 2) throw DomainError("smoothness bound must be >= 2");
    const uint64_t z = largest_prime_leq(k);
    if (y < z) {
        SearchResult r;
        r.proven_minimal = true;
        r.impossible_below_prime = z;
        return r;
    }

    const IntegerTuple progression = construct_primorial_tuple(k);
    const BigInt upper = diameter(progression);
    const std::optional<uint64_t> upper_u64 = as_u64(upper);
    const uint64_t ceiling = upper_u64.value_or(std::numeric_limits<uint64_t>::max() / 4);

    SmoothnessTester tester(y);
    uint64_t nodes = 0;
    FixedDiameterSearch dfs(k, &tester, budget, nodes);

    auto out_of_budget = [&] {
        SearchResult r;
        r.tuple = progression;
        r.diameter = upper;
        r.nodes_explored = std::min(nodes, budget);
        r.budget_exhausted = true;
        return r;
    };

    // Diameters are y-smooth, so walk S(y) in increasing order, regenerating
    // the pool each time the window doubles.
    uint64_t window = std::min<uint64_t>(ceiling, std::max<uint64_t>(64, 4 * k));
    uint64_t next_diameter = k - 1;
    while (true) {
        std::vector<uint64_t> pool = smooth_numbers_up_to(y, window);
        for (auto it = std::lower_bound(pool.begin(), pool.end(), next_diameter); it != pool.end(); ++it) {
            const uint64_t d = *it;
            Outcome out = dfs.run(d, pool);
            if (out == Outcome::kOutOfBudget) return out_of_budget();
            if (out == Outcome::kFound) {
                SearchResult r = make_result(dfs.found());
                r.nodes_explored = nodes;
                r.proven_minimal = true;
                return r;
            }
        }
        if (window >= ceiling) break;
        next_diameter = window + 1;
        window = window > ceiling / 2 ? ceiling : window * 2;
    }
    // Only reachable when the progression's diameter is beyond 64-bit range.
    return out_of_budget();
}

}  // namespace smoothgap
