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

#include "smoothgap/smoothness.hpp"

#include <algorithm>
#include <string>

#include "smoothgap/errors.hpp"
#include "smoothgap/memory.hpp"

namespace smoothgap {

namespace {

void require_positive(const BigInt& n) {
    if (sgn(n) <= 0) throw DomainError("smoothness is defined for n >= 1, got " + to_string(n));
}

void require_bound(uint64_t y) {
    if (y < 2) throw DomainError("smoothness bound must be >= 2, got " + std::to_string(y));
}

const PrimeTable& default_trial_table() {
    static const PrimeTable table = sieve_primes(kDefaultTrialBound);
    return table;
}

// Appends the factorization of n by the given primes; returns the cofactor.
BigInt divide_out(BigInt n, std::span<const uint64_t> primes, std::vector<PrimePower>& factors) {
    for (uint64_t p : primes) {
        if (n == 1) break;
        if (fits_u64(n)) {
            uint64_t m = to_u64(n);
            if (p > m / p) break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) factors.push_back({from_u64(p), e});
    }
    return n;
}

}  // namespace

SmoothnessCertificate factorize(const BigInt& n, uint64_t trial_bound) {
    require_positive(n);
    PrimeTable local;
    const PrimeTable* table = &default_trial_table();
    if (trial_bound != kDefaultTrialBound) {
        local = sieve_primes(trial_bound);
        table = &local;
    }

    SmoothnessCertificate cert;
    cert.n = n;
    BigInt rest = divide_out(n, table->primes(), cert.factors);
    if (rest > 1) {
        // divide_out stops early once p^2 > rest, so rest has no factor below
        // min(p, trial_bound) and is prime if it is under trial_bound^2.
        BigInt square = from_u64(trial_bound);
        square *= square;
        bool prime = rest < square;
        if (!prime) {
            Primality verdict = primality(rest);
            prime = verdict.prime;
            cert.probabilistic = verdict.probabilistic;
        }
        if (!prime) {
            throw BudgetExceededError("trial division up to " + std::to_string(trial_bound) +
                                          " left composite cofactor " + to_string(rest),
                                      to_string(rest));
        }
        cert.factors.push_back({rest, 1});
    }
    if (!cert.factors.empty()) cert.largest_prime_factor = cert.factors.back().prime;
    return cert;
}

SmoothnessTester::SmoothnessTester(uint64_t y) : y_(y) {
    require_bound(y);
    PrimeTable table = sieve_primes(y);
    primes_.assign(table.primes().begin(), table.primes().end());
}

uint64_t SmoothnessTester::rough_part(uint64_t n) const {
    if (n == 0) throw DomainError("smoothness is defined for n >= 1, got 0");
    for (uint64_t p : primes_) {
        if (n == 1) return 1;
        if (p > n / p) {
            // n has no prime factor below p, so it is prime
            return n <= y_ ? 1 : n;
        }
        while (n % p == 0) n /= p;
    }
    return n;
}

BigInt SmoothnessTester::rough_part(const BigInt& n) const {
    require_positive(n);
    if (fits_u64(n)) return from_u64(rough_part(to_u64(n)));
    BigInt m = n;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const uint64_t p = primes_[i];
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        if (fits_u64(m)) {
            // finish on machine words with the primes not yet tried
            uint64_t w = to_u64(m);
            for (std::size_t j = i + 1; j < primes_.size() && w > 1; ++j) {
                const uint64_t q = primes_[j];
                if (q > w / q) return from_u64(w <= y_ ? 1 : w);
                while (w % q == 0) w /= q;
            }
            return from_u64(w);
        }
    }
    return m;
}

SmoothnessResult SmoothnessTester::test(const BigInt& n) const {
    SmoothnessResult result;
    result.cofactor = rough_part(n);
    result.smooth = result.cofactor == 1;
    if (result.smooth) {
        SmoothnessCertificate cert;
        cert.n = n;
        BigInt rest = divide_out(n, primes_, cert.factors);
        // divide_out may stop at p^2 > rest; the leftover is then a prime <= y
        if (rest > 1) cert.factors.push_back({rest, 1});
        if (!cert.factors.empty()) cert.largest_prime_factor = cert.factors.back().prime;
        result.certificate = std::move(cert);
    }
    return result;
}

SmoothnessResult is_smooth(const BigInt& n, uint64_t y) {
    require_positive(n);
    return SmoothnessTester(y).test(n);
}

std::vector<uint64_t> smooth_numbers_up_to(uint64_t y, uint64_t bound) {
    require_bound(y);
    if (bound < 1) throw DomainError("smooth_numbers_up_to requires bound >= 1");
    PrimeTable table = sieve_primes(std::min(y, bound));
    auto primes = table.primes();
    const uint64_t max_entries = memory_budget_bytes() / sizeof(uint64_t);

    std::vector<uint64_t> out;
    // (value, index of smallest prime still allowed as a factor)
    std::vector<std::pair<uint64_t, std::size_t>> stack{{1, 0}};
    while (!stack.empty()) {
        auto [value, first] = stack.back();
        stack.pop_back();
        out.push_back(value);
        if (out.size() > max_entries) {
            throw CapacityError("smooth_numbers_up_to(" + std::to_string(y) + ", " +
                                std::to_string(bound) + ") exceeds the memory budget");
        }
        for (std::size_t i = first; i < primes.size(); ++i) {
            if (primes[i] > bound / value) break;
            stack.emplace_back(value * primes[i], i);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace smoothgap
