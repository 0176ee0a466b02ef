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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothgap/bigint.hpp"

namespace smoothgap {

/// Strictly increasing, non-empty tuple of integers (a candidate H_k).
class IntegerTuple {
  public:
    /// Throws DomainError if empty or not strictly increasing.
    explicit IntegerTuple(std::vector<BigInt> elements);

    static IntegerTuple of(std::initializer_list<int64_t> values);
    static IntegerTuple of(std::span<const uint64_t> values);

    std::size_t size() const noexcept { return elements_.size(); }
    const BigInt& operator[](std::size_t i) const { return elements_[i]; }
    std::span<const BigInt> elements() const noexcept { return elements_; }
    const BigInt& front() const { return elements_.front(); }
    const BigInt& back() const { return elements_.back(); }

    IntegerTuple translated(const BigInt& shift) const;
    /// Translate so that the least element is 0.
    IntegerTuple canonical() const { return translated(-elements_.front()); }

    /// Canonical offsets as machine words, when the diameter fits.
    std::optional<std::vector<uint64_t>> canonical_offsets() const;

    friend bool operator==(const IntegerTuple& a, const IntegerTuple& b) {
        return a.elements_ == b.elements_;
    }

  private:
    std::vector<BigInt> elements_;
};

/// v_p: number of distinct residues of the elements mod p.
uint64_t residue_coverage(const IntegerTuple& tuple, uint64_t p);

struct AdmissibilityReport {
    bool admissible = true;
    /// Smallest prime whose residues are all covered.
    std::optional<uint64_t> obstruction;
    /// v_p for every prime p <= k.
    std::map<uint64_t, uint64_t> coverage;
};

/// Checks only the primes p <= k: k elements occupy at most k < p classes
/// modulo any larger prime, so no larger prime can obstruct.
AdmissibilityReport is_admissible(const IntegerTuple& tuple);

BigInt diameter(const IntegerTuple& tuple);

/// First failing pair (lexicographic in indices) of a difference-smoothness check.
struct FailingPair {
    std::size_t i = 0;
    std::size_t j = 0;
    BigInt lower;
    BigInt upper;
    /// Part of upper - lower left after removing every prime <= y.
    BigInt cofactor;
};

struct DifferenceSmoothReport {
    bool smooth = true;
    std::optional<FailingPair> failure;
};

/// True iff every pairwise difference is y-smooth. Vacuous for k = 1.
DifferenceSmoothReport is_difference_smooth(const IntegerTuple& tuple, uint64_t y);

/// The arithmetic progression 0, w, 2w, ..., (k-1)w with w the product of
/// all primes <= k. Admissible and difference z_k-smooth for every k.
IntegerTuple construct_primorial_tuple(uint64_t k);

/// The first k primes above k, shifted to start at 0.
IntegerTuple construct_consecutive_prime_tuple(uint64_t k);

/// A collision mod z_k, the largest prime <= k.
struct SmoothnessWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    uint64_t prime = 0;
    BigInt difference;
};

/// For admissible H with k >= 2, at most z_k - 1 classes mod z_k are occupied
/// by k > z_k - 1 elements, so two of them collide and z_k divides their
/// difference: H is not difference l-smooth for any l < z_k. Returns the
/// first colliding (i, j) in lexicographic order. Throws PreconditionError
/// when H is not admissible or k < 2.
SmoothnessWitness find_smoothness_witness(const IntegerTuple& tuple);

// Tuple text format: one tuple per line, comma-separated ascending decimal
// integers, '#' starts a comment line.

/// Throws ParseError with 1-based line/column.
std::vector<IntegerTuple> parse_tuples(std::string_view text);

/// Inline literal such as "0,2,6" or "(0, 2, 6)".
IntegerTuple parse_tuple_literal(std::string_view text);

std::string format_tuple(const IntegerTuple& tuple);

}  // namespace smoothgap
