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

#include "smoothgap/memory.hpp"

#include <cstdlib>
#include <string>

#include "smoothgap/errors.hpp"

namespace smoothgap {

uint64_t memory_budget_bytes() {
    const char* env = std::getenv("SMOOTHGAP_MEM_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultMemoryBudget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return kDefaultMemoryBudget;
    return v;
}

void require_memory(uint64_t bytes, std::string_view what) {
    uint64_t budget = memory_budget_bytes();
    if (bytes > budget) {
        throw CapacityError(std::string(what) + " needs " + std::to_string(bytes) +
                            " bytes, over the memory budget of " + std::to_string(budget));
    }
}

}  // namespace smoothgap
