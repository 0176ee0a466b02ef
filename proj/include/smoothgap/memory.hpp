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
#include <string_view>

namespace smoothgap {

/// Default allocation ceiling when SMOOTHGAP_MEM_BUDGET is unset: 2 GiB.
inline constexpr uint64_t kDefaultMemoryBudget = uint64_t{2} << 30;

/// Bytes allowed for sieve and table allocations, read from
/// SMOOTHGAP_MEM_BUDGET on every call.
uint64_t memory_budget_bytes();

/// Throws CapacityError when `bytes` exceeds the budget.
void require_memory(uint64_t bytes, std::string_view what);

}  // namespace smoothgap
