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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "smoothgap/constants.hpp"
#include "smoothgap/scan.hpp"
#include "smoothgap/search.hpp"
#include "smoothgap/smoothness.hpp"
#include "smoothgap/tuples.hpp"

namespace smoothgap {

inline constexpr std::string_view kSchema = "smoothgap/1";

/// %.12g: 12 significant digits, ties to even under the default rounding mode.
std::string format_float(double value);

/// Integers inside the signed 64-bit range become JSON numbers, larger ones
/// decimal strings.
nlohmann::json bigint_json(const BigInt& value);
nlohmann::json tuple_json(const IntegerTuple& tuple);

nlohmann::json to_json(const AdmissibilityReport& report);
nlohmann::json to_json(const DifferenceSmoothReport& report, uint64_t y);
nlohmann::json to_json(const SmoothnessWitness& witness, const IntegerTuple& tuple);
nlohmann::json to_json(const SmoothnessCertificate& cert);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const SingularSeriesEstimate& estimate);
nlohmann::json to_json(const KmEntry& entry);
nlohmann::json to_json(const ScanReport& report);

/// Pretty JSON with sorted keys, floats through format_float, trailing newline.
std::string render_json(const nlohmann::json& value);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

std::string scan_report_csv(const ScanReport& report);
std::string km_table_csv(const std::vector<KmEntry>& entries);
std::string singular_series_csv(const SingularSeriesEstimate& estimate);

std::string_view mode_name(ScanMode mode);

}  // namespace smoothgap
