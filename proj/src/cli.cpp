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

#include "smoothgap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "smoothgap/constants.hpp"
#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"
#include "smoothgap/report.hpp"
#include "smoothgap/scan.hpp"
#include "smoothgap/search.hpp"
#include "smoothgap/tuples.hpp"

namespace smoothgap {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

uint64_t checked_pow(uint64_t base, uint64_t exp, std::string_view text) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw UsageError("number out of range: " + std::string(text));
        r *= base;
    }
    return r;
}

uint64_t parse_plain(std::string_view text, std::string_view whole) {
    if (text.empty() || text.find_first_not_of("0123456789_'") != std::string_view::npos) {
        throw UsageError("not a non-negative integer: " + std::string(whole));
    }
    uint64_t v = 0;
    for (char c : text) {
        if (c == '_' || c == '\'') continue;
        const uint64_t d = static_cast<uint64_t>(c - '0');
        if (v > (UINT64_MAX - d) / 10) throw UsageError("number out of range: " + std::string(whole));
        v = v * 10 + d;
    }
    return v;
}

/// Accepts 12345, 10^7 and 3e6.
uint64_t parse_count(std::string_view text) {
    if (auto caret = text.find('^'); caret != std::string_view::npos) {
        return checked_pow(parse_plain(text.substr(0, caret), text), parse_plain(text.substr(caret + 1), text), text);
    }
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        const uint64_t mant = parse_plain(text.substr(0, e), text);
        const uint64_t scale = checked_pow(10, parse_plain(text.substr(e + 1), text), text);
        if (mant != 0 && scale > UINT64_MAX / mant) throw UsageError("number out of range: " + std::string(text));
        return mant * scale;
    }
    return parse_plain(text, text);
}

std::vector<uint64_t> parse_count_list(std::string_view text) {
    std::vector<uint64_t> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        out.push_back(parse_count(item));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// "-" reads stdin, an existing path reads the file, anything else is an
/// inline literal.
std::vector<IntegerTuple> load_tuples(const std::string& arg, std::istream& in) {
    if (arg == "-") return parse_tuples(read_stream(in));
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg, std::ios::binary);
        if (!file) throw UsageError("cannot read " + arg);
        return parse_tuples(read_stream(file));
    }
    return {parse_tuple_literal(arg)};
}

IntegerTuple load_single_tuple(const std::string& arg, std::istream& in) {
    std::vector<IntegerTuple> tuples = load_tuples(arg, in);
    if (tuples.size() != 1) {
        throw UsageError("expected exactly one tuple in " + arg + ", found " + std::to_string(tuples.size()));
    }
    return std::move(tuples.front());
}

struct Options {
    unsigned threads = 1;

    // construct
    std::string construct_kind;
    std::string construct_k;
    std::string sidecar;

    // verify
    std::string verify_input = "-";
    bool verify_admissible = false;
    std::optional<uint64_t> verify_diff_smooth;
    bool verify_witness = false;

    // search
    std::string search_k;
    std::optional<uint64_t> search_smooth;
    std::string search_budget = "1000000";

    // scan
    std::string scan_mode;
    std::string scan_x;
    std::optional<uint64_t> scan_y;
    std::string scan_tuple;
    std::string scan_checkpoints;
    std::string format = "json";
    bool exclude_gap_one = false;
    std::string segment_size;
    std::optional<uint64_t> at_least_m;
    std::string series_cutoff;

    // constants
    bool km_table = false;
    std::string singular_series;
    std::string cutoff;
};

int cmd_construct(const Options& o, std::ostream& out) {
    const uint64_t k = parse_count(o.construct_k);
    if (k < 1) throw UsageError("k must be >= 1");
    json sidecar = {{"schema", kSchema}, {"kind", "construct"}, {"construction", o.construct_kind}, {"k", k}};
    std::optional<IntegerTuple> tuple;
    if (o.construct_kind == "primorial") {
        tuple = construct_primorial_tuple(k);
        sidecar["omega"] = bigint_json(primorial(k));
        sidecar["smoothness_bound"] = k >= 2 ? json(largest_prime_leq(k)) : json(nullptr);
    } else {
        tuple = construct_consecutive_prime_tuple(k);
        sidecar["omega"] = nullptr;
        sidecar["smoothness_bound"] = nullptr;
    }
    sidecar["diameter"] = bigint_json(diameter(*tuple));
    sidecar["admissible"] = is_admissible(*tuple).admissible;
    out << format_tuple(*tuple) << '\n';
    if (!o.sidecar.empty()) {
        std::ofstream file(o.sidecar, std::ios::binary);
        if (!file) throw UsageError("cannot write sidecar " + o.sidecar);
        file << render_json(sidecar);
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
    const std::vector<IntegerTuple> tuples = load_tuples(o.verify_input, in);
    const bool admissible = o.verify_admissible || (!o.verify_diff_smooth && !o.verify_witness);
    bool all_hold = true;
    json results = json::array();
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const IntegerTuple& tuple = tuples[t];
        json entry = {{"tuple", tuple_json(tuple)}, {"k", tuple.size()}};
        if (admissible) {
            AdmissibilityReport rep = is_admissible(tuple);
            entry["admissible"] = to_json(rep);
            if (!rep.admissible) {
                all_hold = false;
                err << "tuple " << t + 1 << ": not admissible, obstruction prime " << *rep.obstruction << '\n';
            }
        }
        if (o.verify_diff_smooth) {
            DifferenceSmoothReport rep = is_difference_smooth(tuple, *o.verify_diff_smooth);
            entry["difference_smooth"] = to_json(rep, *o.verify_diff_smooth);
            if (!rep.smooth) {
                all_hold = false;
                err << "tuple " << t + 1 << ": not difference " << *o.verify_diff_smooth << "-smooth, pair ("
                    << to_string(rep.failure->lower) << "," << to_string(rep.failure->upper) << ")\n";
            }
        }
        if (o.verify_witness) {
            try {
                SmoothnessWitness w = find_smoothness_witness(tuple);
                entry["witness"] = to_json(w, tuple);
            } catch (const PreconditionError& e) {
                all_hold = false;
                entry["witness"] = {{"error", e.what()}};
                err << "tuple " << t + 1 << ": " << e.what() << '\n';
            }
        }
        results.push_back(std::move(entry));
    }
    out << render_json({{"schema", kSchema}, {"kind", "verify"}, {"all_hold", all_hold}, {"results", results}});
    return all_hold ? kExitOk : kExitNegative;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    const uint64_t k = parse_count(o.search_k);
    if (k < 2) throw UsageError("search requires k >= 2");
    const uint64_t budget = parse_count(o.search_budget);
    SearchResult result = o.search_smooth ? search_min_diameter_difference_smooth(k, *o.search_smooth, budget)
                                          : search_min_diameter_admissible(k, budget);
    json doc = to_json(result);
    doc["schema"] = kSchema;
    doc["kind"] = "search";
    doc["k"] = k;
    doc["y"] = o.search_smooth ? json(*o.search_smooth) : json(nullptr);
    out << render_json(doc);
    if (result.budget_exhausted && !result.proven_minimal) {
        err << "node budget exhausted before minimality was proven\n";
        return kExitCapacity;
    }
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::istream& in) {
    ScanRequest req;
    if (o.scan_mode == "pairs") {
        req.mode = ScanMode::kPairs;
    } else if (o.scan_mode == "consecutive-pairs") {
        req.mode = ScanMode::kConsecutivePairs;
    } else {
        req.mode = ScanMode::kTupleTranslates;
    }
    req.x_max = parse_count(o.scan_x);
    if (req.x_max < 1) throw UsageError("x must be positive");
    if (req.mode == ScanMode::kTupleTranslates) {
        if (o.scan_tuple.empty()) throw UsageError("tuple-translates needs --tuple-file");
        req.tuple = load_single_tuple(o.scan_tuple, in);
        req.at_least_m = o.at_least_m;
    } else {
        req.y = o.scan_y.value_or(47);
        if (*req.y < 2) throw UsageError("--y must be >= 2");
    }
    if (!o.scan_checkpoints.empty()) {
        req.checkpoints = parse_count_list(o.scan_checkpoints);
        if (!req.checkpoints.empty() && req.checkpoints.back() < req.x_max) req.checkpoints.push_back(req.x_max);
    }
    req.include_gap_one = !o.exclude_gap_one;

    ScanOptions opt;
    opt.threads = o.threads;
    if (!o.segment_size.empty()) opt.segment_size = parse_count(o.segment_size);
    if (!o.series_cutoff.empty()) opt.series_cutoff = parse_count(o.series_cutoff);

    ScanReport report = run_scan(req, opt);
    out << (o.format == "csv" ? scan_report_csv(report) : render_json(to_json(report)));
    return kExitOk;
}

int cmd_constants(const Options& o, std::ostream& out, std::istream& in) {
    if (o.km_table == !o.singular_series.empty()) {
        throw UsageError("constants needs exactly one of --km-table or --singular-series");
    }
    if (o.km_table) {
        std::vector<KmEntry> table = km_table();
        if (o.format == "csv") {
            out << km_table_csv(table);
        } else {
            json entries = json::array();
            for (const KmEntry& e : table) entries.push_back(to_json(e));
            out << render_json({{"schema", kSchema}, {"kind", "km_table"}, {"entries", entries}});
        }
        return kExitOk;
    }
    IntegerTuple tuple = load_single_tuple(o.singular_series, in);
    uint64_t cutoff = 0;
    if (o.cutoff.empty()) {
        cutoff = kDefaultSeriesCutoff;
        const BigInt diam = diameter(tuple);
        if (!fits_u64(diam)) throw CapacityError("tuple diameter too large for a prime cutoff");
        cutoff = std::max<uint64_t>({cutoff, to_u64(diam) + 1, tuple.size()});
    } else {
        cutoff = parse_count(o.cutoff);
    }
    SingularSeriesEstimate est = singular_series(tuple, cutoff);
    if (o.format == "csv") {
        out << singular_series_csv(est);
    } else {
        json doc = to_json(est);
        doc["schema"] = kSchema;
        doc["kind"] = "singular_series";
        doc["tuple"] = tuple_json(tuple);
        out << render_json(doc);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Smooth prime gaps: admissible tuples, smoothness, singular series and sieve scans", "smoothgap"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for scans (0 = all cores)")->capture_default_str();

    auto* construct = app.add_subcommand("construct", "Emit a constructed admissible tuple");
    construct->add_option("kind", o.construct_kind)->required()->check(CLI::IsMember({"primorial", "consecutive-prime"}));
    construct->add_option("k", o.construct_k, "Tuple length")->required();
    construct->add_option("--sidecar", o.sidecar, "Write a JSON description of the construction to this path");

    auto* verify = app.add_subcommand("verify", "Check admissibility, difference smoothness and residue collisions");
    verify->add_option("tuples", o.verify_input, "Tuple file, inline literal, or - for stdin")->capture_default_str();
    verify->add_flag("--admissible", o.verify_admissible, "Check admissibility (default when no check is selected)");
    verify->add_option("--diff-smooth", o.verify_diff_smooth, "Check that all differences are y-smooth")
        ->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    verify->add_flag("--witness", o.verify_witness, "Report a pair whose difference is divisible by z_k");

    auto* search = app.add_subcommand("search", "Search for a minimal-diameter admissible tuple");
    search->add_option("k", o.search_k, "Tuple length")->required();
    search->add_option("--smooth", o.search_smooth, "Also require all differences to be y-smooth")
        ->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    search->add_option("--budget", o.search_budget, "Node budget")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "Count smooth-gap prime pairs or prime tuple translates");
    scan->add_option("mode", o.scan_mode)->required()->check(CLI::IsMember({"pairs", "consecutive-pairs", "tuple-translates"}));
    scan->add_option("x", o.scan_x, "Scan bound, e.g. 10^7")->required();
    scan->add_option("--y", o.scan_y, "Smoothness bound for pair modes (default 47)");
    scan->add_option("--tuple-file,--tuple", o.scan_tuple, "Tuple file or inline literal for tuple-translates");
    scan->add_option("--checkpoints", o.scan_checkpoints, "Comma-separated ascending checkpoints");
    scan->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    scan->add_flag("--exclude-gap-one", o.exclude_gap_one, "Do not count the gap 3 - 2 = 1");
    scan->add_option("--segment-size", o.segment_size, "Sieve segment length");
    scan->add_option("--at-least-m", o.at_least_m, "Also count n with at least m primes among n + H");
    scan->add_option("--series-cutoff", o.series_cutoff, "Prime cutoff for the singular series");

    auto* constants = app.add_subcommand("constants", "k_m table and singular series");
    constants->add_flag("--km-table", o.km_table, "Print the k_m / y_m table");
    constants->add_option("--singular-series", o.singular_series, "Tuple file or inline literal");
    constants->add_option("--cutoff", o.cutoff, "Prime cutoff for the product");
    constants->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    for (auto* sub : {construct, verify, search, scan, constants}) sub->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err, in);
        if (search->parsed()) return cmd_search(o, out, err);
        if (scan->parsed()) return cmd_scan(o, out, in);
        if (constants->parsed()) return cmd_constants(o, out, in);
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const BudgetExceededError& e) {
        err << "budget: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace smoothgap
