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

#include "smoothgap/tuples.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"
#include "smoothgap/smoothness.hpp"

namespace smoothgap {

IntegerTuple::IntegerTuple(std::vector<BigInt> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw DomainError("a tuple needs at least one element");
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (!(elements_[i - 1] < elements_[i])) {
            throw DomainError("tuple elements must be strictly increasing (position " +
                              std::to_string(i) + ")");
        }
    }
}

IntegerTuple IntegerTuple::of(std::initializer_list<int64_t> values) {
    std::vector<BigInt> v;
    v.reserve(values.size());
    for (int64_t x : values) v.push_back(from_i64(x));
    return IntegerTuple(std::move(v));
}

IntegerTuple IntegerTuple::of(std::span<const uint64_t> values) {
    std::vector<BigInt> v;
    v.reserve(values.size());
    for (uint64_t x : values) v.push_back(from_u64(x));
    return IntegerTuple(std::move(v));
}

IntegerTuple IntegerTuple::translated(const BigInt& shift) const {
    std::vector<BigInt> v = elements_;
    for (BigInt& x : v) x += shift;
    return IntegerTuple(std::move(v));
}

std::optional<std::vector<uint64_t>> IntegerTuple::canonical_offsets() const {
    if (!fits_u64(elements_.back() - elements_.front())) return std::nullopt;
    std::vector<uint64_t> out;
    out.reserve(elements_.size());
    for (const BigInt& x : elements_) out.push_back(to_u64(x - elements_.front()));
    return out;
}

uint64_t residue_coverage(const IntegerTuple& tuple, uint64_t p) {
    if (p < 2) throw DomainError("residue_coverage needs a modulus >= 2");
    std::vector<uint64_t> residues;
    residues.reserve(tuple.size());
    for (const BigInt& x : tuple.elements()) residues.push_back(mod_u64(x, p));
    std::sort(residues.begin(), residues.end());
    return static_cast<uint64_t>(std::unique(residues.begin(), residues.end()) - residues.begin());
}

AdmissibilityReport is_admissible(const IntegerTuple& tuple) {
    AdmissibilityReport report;
    PrimeTable table = sieve_primes(tuple.size());
    for (uint64_t p : table.primes()) {
        uint64_t v = residue_coverage(tuple, p);
        report.coverage.emplace(p, v);
        if (v == p && report.admissible) {
            report.admissible = false;
            report.obstruction = p;
        }
    }
    return report;
}

BigInt diameter(const IntegerTuple& tuple) { return tuple.back() - tuple.front(); }

DifferenceSmoothReport is_difference_smooth(const IntegerTuple& tuple, uint64_t y) {
    SmoothnessTester tester(y);
    DifferenceSmoothReport report;
    const std::size_t k = tuple.size();

    if (auto offsets = tuple.canonical_offsets()) {
        const auto& h = *offsets;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                uint64_t rough = tester.rough_part(h[j] - h[i]);
                if (rough != 1) {
                    report.smooth = false;
                    report.failure = FailingPair{i, j, tuple[i], tuple[j], from_u64(rough)};
                    return report;
                }
            }
        }
        return report;
    }

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            BigInt rough = tester.rough_part(BigInt(tuple[j] - tuple[i]));
            if (rough != 1) {
                report.smooth = false;
                report.failure = FailingPair{i, j, tuple[i], tuple[j], rough};
                return report;
            }
        }
    }
    return report;
}

IntegerTuple construct_primorial_tuple(uint64_t k) {
    if (k < 1) throw DomainError("construct_primorial_tuple requires k >= 1");
    const BigInt step = primorial(k);
    std::vector<BigInt> v;
    v.reserve(k);
    for (uint64_t i = 0; i < k; ++i) v.push_back(step * from_u64(i));
    return IntegerTuple(std::move(v));
}

IntegerTuple construct_consecutive_prime_tuple(uint64_t k) {
    if (k < 1) throw DomainError("construct_consecutive_prime_tuple requires k >= 1");
    // pi(x) > k once x is a little past k log k; grow until enough primes exist
    uint64_t limit = std::max<uint64_t>(64, 2 * k);
    while (true) {
        PrimeTable table = sieve_primes(limit);
        auto primes = table.primes();
        auto first = std::upper_bound(primes.begin(), primes.end(), k);
        if (static_cast<uint64_t>(primes.end() - first) >= k) {
            std::vector<uint64_t> offsets;
            offsets.reserve(k);
            for (auto it = first; it != first + static_cast<std::ptrdiff_t>(k); ++it) {
                offsets.push_back(*it - *first);
            }
            return IntegerTuple::of(std::span<const uint64_t>(offsets));
        }
        limit *= 2;
    }
}

SmoothnessWitness find_smoothness_witness(const IntegerTuple& tuple) {
    const std::size_t k = tuple.size();
    if (k < 2) throw PreconditionError("find_smoothness_witness requires k >= 2");
    if (!is_admissible(tuple).admissible) {
        throw PreconditionError("find_smoothness_witness requires an admissible tuple");
    }
    const uint64_t z = largest_prime_leq(k);
    std::vector<uint64_t> residues(k);
    std::unordered_map<uint64_t, std::size_t> count;
    for (std::size_t i = 0; i < k; ++i) {
        residues[i] = mod_u64(tuple[i], z);
        ++count[residues[i]];
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (count[residues[i]] < 2) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (residues[j] == residues[i]) return {i, j, z, tuple[j] - tuple[i]};
        }
    }
    // unreachable for admissible input
    throw PreconditionError("no residue collision mod " + std::to_string(z));
}

namespace {

struct LineParser {
    std::string_view line;
    std::size_t line_no;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no, pos + 1); }

    void skip_space() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }

    IntegerTuple parse() {
        std::vector<BigInt> values;
        while (true) {
            skip_space();
            const std::size_t start = pos;
            if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
            const std::size_t digits = pos;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos == digits) {
                pos = start;
                fail(pos < line.size() ? "expected an integer" : "expected an integer, found end of line");
            }
            std::string token(line.substr(start, pos - start));
            if (token[0] == '+') token.erase(0, 1);
            BigInt value(token, 10);
            if (!values.empty() && !(values.back() < value)) {
                pos = start;
                fail("elements must be strictly increasing");
            }
            values.push_back(std::move(value));
            skip_space();
            if (pos == line.size()) break;
            if (line[pos] != ',') fail(std::string("unexpected character '") + line[pos] + "'");
            ++pos;
        }
        return IntegerTuple(std::move(values));
    }
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<IntegerTuple> parse_tuples(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<IntegerTuple> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        out.push_back(LineParser{line, line_no}.parse());
    }
    return out;
}

IntegerTuple parse_tuple_literal(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parenthesis", 1, body.size());
        body = body.substr(1, body.size() - 2);
    }
    return LineParser{body, 1}.parse();
}

std::string format_tuple(const IntegerTuple& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(tuple[i]);
    }
    return out;
}

}  // namespace smoothgap
