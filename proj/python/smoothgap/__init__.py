# Copyright 2026 The smoothgap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Admissible tuples, smooth prime gaps, singular series and sieve scans."""

from ._core import (
    BudgetExceededError,
    CapacityError,
    ParseError,
    PreconditionError,
    construct_consecutive_prime_tuple,
    construct_primorial_tuple,
    diameter,
    factorize,
    find_smoothness_witness,
    format_tuple,
    hl_prediction,
    is_admissible,
    is_difference_smooth,
    is_prime,
    is_smooth,
    km_table,
    largest_prime_leq,
    parse_tuples,
    primality,
    primorial,
    residue_coverage,
    scan,
    search_min_diameter_admissible,
    search_min_diameter_difference_smooth,
    sieve_primes,
    singular_series,
    smooth_numbers_up_to,
)

__version__ = "0.1.0"
