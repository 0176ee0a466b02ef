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

#include "smoothgap/constants.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"

namespace smoothgap {

namespace {

// Neumaier compensated sum
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace

SingularSeriesEstimate singular_series(const IntegerTuple& tuple, uint64_t prime_cutoff,
                                       const std::function<uint64_t(uint64_t)>& coverage) {
    const uint64_t k = tuple.size();
    const BigInt diam = diameter(tuple);
    if (prime_cutoff < k || !(diam < from_u64(prime_cutoff))) {
        throw PreconditionError("singular series cutoff " + std::to_string(prime_cutoff) +
                                " must be >= k = " + std::to_string(k) + " and > diameter " +
                                to_string(diam));
    }

    SingularSeriesEstimate est;
    est.k = k;
    est.prime_cutoff = prime_cutoff;

    PrimeTable table = sieve_primes(prime_cutoff);
    CompensatedSum log_sum;
    const double kd = static_cast<double>(k);
    for (uint64_t p : table.primes()) {
        const uint64_t v = coverage(p);
        if (v >= p) {
            est.admissible = false;
            est.obstruction = p;
            est.value = 0.0;
            return est;
        }
        const double pd = static_cast<double>(p);
        log_sum.add(std::log1p(-static_cast<double>(v) / pd) - kd * std::log1p(-1.0 / pd));
    }
    est.value = std::exp(log_sum.value());

    // For p > cutoff every class is distinct, so each factor's log is about
    // -(k^2 - k) / (2 p^2); the sum of 1/p^2 over p > P is close to 1/(P log P).
    const double cutoff = static_cast<double>(prime_cutoff);
    est.tail_magnitude = (kd * kd - kd) / 2.0 / (cutoff * std::log(cutoff));
    return est;
}

SingularSeriesEstimate singular_series(const IntegerTuple& tuple, uint64_t prime_cutoff) {
    const std::optional<uint64_t> diam = as_u64(diameter(tuple));
    const uint64_t k = tuple.size();
    return singular_series(tuple, prime_cutoff, [&](uint64_t p) -> uint64_t {
        // p > diameter separates every pair
        if (diam && p > *diam) return k;
        return residue_coverage(tuple, p);
    });
}

double log_power_integral(double x, uint64_t k) {
    if (!(x > 2.0)) throw DomainError("log_power_integral requires x > 2");
    // substitute t = e^u
    const double kd = static_cast<double>(k);
    auto integrand = [kd](double u) { return std::exp(u - kd * std::log(u)); };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, std::log(2.0),
                                                                        std::log(x), 30, 1e-13);
}

double hl_prediction(const SingularSeriesEstimate& series, double x, HlForm form) {
    if (!(x > 2.0)) throw DomainError("HL prediction requires x > 2");
    if (!series.admissible) return 0.0;
    if (form == HlForm::kRatio) {
        return series.value * x / std::pow(std::log(x), static_cast<double>(series.k));
    }
    return series.value * log_power_integral(x, series.k);
}

double hl_prediction(const IntegerTuple& tuple, double x, HlForm form, uint64_t prime_cutoff) {
    if (!(x > 2.0)) throw DomainError("HL prediction requires x > 2");
    if (prime_cutoff == 0) {
        prime_cutoff = kDefaultSeriesCutoff;
        const BigInt diam = diameter(tuple);
        if (!fits_u64(diam)) throw CapacityError("tuple diameter " + to_string(diam) + " is too large for a prime cutoff");
        if (!(diam < from_u64(prime_cutoff))) prime_cutoff = to_u64(diam) + 1;
        prime_cutoff = std::max<uint64_t>(prime_cutoff, tuple.size());
    }
    return hl_prediction(singular_series(tuple, prime_cutoff), x, form);
}

std::vector<KmEntry> km_table() {
    struct Row {
        uint64_t m;
        uint64_t k_m;
        bool conditional;
    };
    static constexpr std::array<Row, 6> kRows{{
        {2, 50, false},
        {3, 35265, false},
        {4, 1624545, false},
        {5, 73807570, false},
        {6, 3340375663ULL, false},
        {2, 5, true},
    }};
    std::vector<KmEntry> out;
    out.reserve(kRows.size());
    for (const Row& row : kRows) out.push_back({row.m, row.k_m, largest_prime_leq(row.k_m), row.conditional});
    return out;
}

}  // namespace smoothgap
