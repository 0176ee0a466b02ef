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
#include <string>

#include <gmpxx.h>

namespace smoothgap {

using BigInt = mpz_class;

inline BigInt from_u64(uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt from_i64(int64_t v) {
    if (v >= 0) return from_u64(static_cast<uint64_t>(v));
    // -(v + 1) + 1 avoids overflow at INT64_MIN
    BigInt r = from_u64(static_cast<uint64_t>(-(v + 1)));
    r += 1;
    return -r;
}

inline bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline uint64_t to_u64(const BigInt& v) {
    uint64_t out = 0;
    size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return count == 0 ? 0 : out;
}

inline std::optional<uint64_t> as_u64(const BigInt& v) {
    if (!fits_u64(v)) return std::nullopt;
    return to_u64(v);
}

inline bool fits_i64(const BigInt& v) {
    if (sgn(v) >= 0) return mpz_sizeinbase(v.get_mpz_t(), 2) <= 63;
    BigInt m = -v - 1;
    return mpz_sizeinbase(m.get_mpz_t(), 2) <= 63;
}

inline int64_t to_i64(const BigInt& v) {
    if (sgn(v) >= 0) return static_cast<int64_t>(to_u64(v));
    BigInt m = -v - 1;
    return -static_cast<int64_t>(to_u64(m)) - 1;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline uint64_t mod_u64(const BigInt& v, uint64_t p) {
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

}  // namespace smoothgap
