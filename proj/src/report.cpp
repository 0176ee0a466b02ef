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

#include "smoothgap/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace smoothgap {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

void render(const json& v, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            // nlohmann::json objects are std::map backed, so keys iterate sorted
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += json(it.key()).dump();
                out += ": ";
                render(it.value(), out, indent + 2);
            }
            out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            // arrays of scalars stay on one line
            bool flat = std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
            out += flat ? "[" : "[\n";
            bool first = true;
            for (const json& e : v) {
                if (!first) out += flat ? ", " : ",\n";
                first = false;
                if (!flat) out += pad;
                render(e, out, indent + 2);
            }
            if (!flat) out += "\n" + std::string(static_cast<std::size_t>(indent), ' ');
            out += "]";
            return;
        }
        case json::value_t::number_float: {
            const double d = v.get<double>();
            out += std::isfinite(d) ? format_float(d) : "null";
            return;
        }
        default:
            out += v.dump();
    }
}

}  // namespace

std::string format_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

json bigint_json(const BigInt& value) {
    if (fits_i64(value)) return to_i64(value);
    return to_string(value);
}

json tuple_json(const IntegerTuple& tuple) {
    json arr = json::array();
    for (const BigInt& x : tuple.elements()) arr.push_back(bigint_json(x));
    return arr;
}

json to_json(const AdmissibilityReport& report) {
    json coverage = json::array();
    for (auto [p, v] : report.coverage) coverage.push_back({{"p", p}, {"v_p", v}});
    return {{"admissible", report.admissible}, {"obstruction", optional_json(report.obstruction)},
            {"coverage", coverage}};
}

json to_json(const DifferenceSmoothReport& report, uint64_t y) {
    json out = {{"y", y}, {"smooth", report.smooth}, {"failing_pair", nullptr}};
    if (report.failure) {
        const FailingPair& f = *report.failure;
        out["failing_pair"] = {{"indices", {f.i, f.j}},
                               {"values", {bigint_json(f.lower), bigint_json(f.upper)}},
                               {"rough_cofactor", bigint_json(f.cofactor)}};
    }
    return out;
}

json to_json(const SmoothnessWitness& witness, const IntegerTuple& tuple) {
    return {{"indices", {witness.i, witness.j}},
            {"values", {bigint_json(tuple[witness.i]), bigint_json(tuple[witness.j])}},
            {"prime", witness.prime},
            {"difference", bigint_json(witness.difference)}};
}

json to_json(const SmoothnessCertificate& cert) {
    json factors = json::array();
    for (const PrimePower& f : cert.factors) factors.push_back({bigint_json(f.prime), f.exponent});
    return {{"n", bigint_json(cert.n)},
            {"factors", factors},
            {"largest_prime_factor", cert.largest_prime_factor ? bigint_json(*cert.largest_prime_factor) : json(nullptr)},
            {"probabilistic", cert.probabilistic}};
}

json to_json(const SearchResult& result) {
    json out = {{"tuple", result.tuple ? tuple_json(*result.tuple) : json(nullptr)},
                {"diameter", result.diameter ? bigint_json(*result.diameter) : json(nullptr)},
                {"nodes_explored", result.nodes_explored},
                {"proven_minimal", result.proven_minimal},
                {"budget_exhausted", result.budget_exhausted},
                {"impossible_below_prime", optional_json(result.impossible_below_prime)},
                {"reason", nullptr}};
    if (result.impossible_below_prime) {
        out["reason"] = "an admissible tuple of this length always has a difference divisible by z_k = " +
                        std::to_string(*result.impossible_below_prime) +
                        ", so no difference y-smooth tuple exists for y < z_k";
    }
    return out;
}

json to_json(const SingularSeriesEstimate& est) {
    return {{"value", est.value},
            {"k", est.k},
            {"prime_cutoff", est.prime_cutoff},
            {"tail_magnitude", est.tail_magnitude},
            {"admissible", est.admissible},
            {"obstruction", optional_json(est.obstruction)}};
}

json to_json(const KmEntry& entry) {
    return {{"m", entry.m}, {"k_m", entry.k_m}, {"y_m", entry.y_m}, {"conditional", entry.conditional}};
}

std::string_view mode_name(ScanMode mode) {
    switch (mode) {
        case ScanMode::kPairs:
            return "pairs";
        case ScanMode::kConsecutivePairs:
            return "consecutive-pairs";
        case ScanMode::kTupleTranslates:
            return "tuple-translates";
    }
    return "unknown";
}

json to_json(const ScanReport& report) {
    const ScanRequest& req = report.request;
    json request = {{"mode", mode_name(req.mode)},
                    {"x_max", req.x_max},
                    {"y", optional_json(req.y)},
                    {"tuple", req.tuple ? tuple_json(*req.tuple) : json(nullptr)},
                    {"checkpoints", req.checkpoints},
                    {"include_gap_one", req.include_gap_one},
                    {"at_least_m", optional_json(req.at_least_m)}};
    json records = json::array();
    for (const CheckpointRecord& r : report.records) {
        json rec = {{"checkpoint", r.checkpoint},
                    {"count", r.count},
                    {"hl_ratio_prediction", optional_json(r.hl_ratio_prediction)},
                    {"hl_integral_prediction", optional_json(r.hl_integral_prediction)},
                    {"ratio", optional_json(r.ratio)}};
        if (req.at_least_m) rec["at_least_m_count"] = optional_json(r.at_least_m_count);
        records.push_back(std::move(rec));
    }
    return {{"schema", kSchema},
            {"kind", "scan"},
            {"request", request},
            {"records", records},
            {"witnesses", report.witnesses},
            {"singular_series", report.series ? to_json(*report.series) : json(nullptr)}};
}

std::string render_json(const json& value) {
    std::string out;
    render(value, out, 0);
    out += '\n';
    return out;
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string csv_optional(const std::optional<double>& v) { return v ? format_float(*v) : std::string(); }

void csv_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
}

}  // namespace

std::string scan_report_csv(const ScanReport& report) {
    std::string out;
    const bool with_m = report.request.at_least_m.has_value();
    std::vector<std::string> header{"checkpoint", "count", "hl_ratio_prediction", "hl_integral_prediction", "ratio"};
    if (with_m) header.push_back("at_least_m_count");
    csv_row(out, header);
    for (const CheckpointRecord& r : report.records) {
        std::vector<std::string> row{std::to_string(r.checkpoint), std::to_string(r.count),
                                     csv_optional(r.hl_ratio_prediction), csv_optional(r.hl_integral_prediction),
                                     csv_optional(r.ratio)};
        if (with_m) row.push_back(r.at_least_m_count ? std::to_string(*r.at_least_m_count) : std::string());
        csv_row(out, row);
    }
    return out;
}

std::string km_table_csv(const std::vector<KmEntry>& entries) {
    std::string out;
    csv_row(out, {"m", "k_m", "y_m", "conditional"});
    for (const KmEntry& e : entries) {
        csv_row(out, {std::to_string(e.m), std::to_string(e.k_m), std::to_string(e.y_m),
                      e.conditional ? "true" : "false"});
    }
    return out;
}

std::string singular_series_csv(const SingularSeriesEstimate& est) {
    std::string out;
    csv_row(out, {"k", "prime_cutoff", "value", "tail_magnitude", "admissible", "obstruction"});
    csv_row(out, {std::to_string(est.k), std::to_string(est.prime_cutoff), format_float(est.value),
                  format_float(est.tail_magnitude), est.admissible ? "true" : "false",
                  est.obstruction ? std::to_string(*est.obstruction) : std::string()});
    return out;
}

}  // namespace smoothgap
