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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smoothgap/constants.hpp"
#include "smoothgap/errors.hpp"
#include "smoothgap/primes.hpp"
#include "smoothgap/report.hpp"
#include "smoothgap/scan.hpp"
#include "smoothgap/search.hpp"
#include "smoothgap/smoothness.hpp"
#include "smoothgap/tuples.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!text) {
            PyErr_Clear();
            return false;
        }
        return value.set_str(text.cast<std::string>(), 10) == 0;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace smoothgap;

py::object to_python(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(to_python(e));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_python(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

IntegerTuple as_tuple(const std::vector<BigInt>& values) { return IntegerTuple(values); }

std::vector<BigInt> elements(const IntegerTuple& t) { return {t.elements().begin(), t.elements().end()}; }

HlForm parse_form(const std::string& mode) {
    if (mode == "ratio") return HlForm::kRatio;
    if (mode == "integral") return HlForm::kIntegral;
    throw DomainError("mode must be 'ratio' or 'integral'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Admissible tuples, smooth prime gaps, singular series and sieve scans";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    // primes
    m.def("sieve_primes", [](uint64_t limit) {
        PrimeTable t = sieve_primes(limit);
        return std::vector<uint64_t>(t.primes().begin(), t.primes().end());
    }, py::arg("limit"));
    m.def("is_prime", [](const BigInt& n, int rounds) { return is_prime(n, rounds); }, py::arg("n"),
          py::arg("rounds") = kDefaultPrimalityRounds);
    m.def("primality", [](const BigInt& n, int rounds) {
        Primality p = primality(n, rounds);
        return py::make_tuple(p.prime, p.probabilistic);
    }, py::arg("n"), py::arg("rounds") = kDefaultPrimalityRounds);
    m.def("primorial", [](uint64_t k) { return primorial(k); }, py::arg("k"));
    m.def("largest_prime_leq", &largest_prime_leq, py::arg("k"));

    // smoothness
    m.def("factorize", [](const BigInt& n) { return to_python(to_json(factorize(n))); }, py::arg("n"));
    m.def("is_smooth", [](const BigInt& n, uint64_t y) {
        SmoothnessResult r = is_smooth(n, y);
        return py::make_tuple(r.smooth, r.cofactor);
    }, py::arg("n"), py::arg("y"));
    m.def("smooth_numbers_up_to", &smooth_numbers_up_to, py::arg("y"), py::arg("bound"));

    // tuples
    m.def("residue_coverage", [](const std::vector<BigInt>& h, uint64_t p) {
        return residue_coverage(as_tuple(h), p);
    }, py::arg("tuple"), py::arg("p"));
    m.def("is_admissible", [](const std::vector<BigInt>& h) {
        return to_python(to_json(is_admissible(as_tuple(h))));
    }, py::arg("tuple"));
    m.def("diameter", [](const std::vector<BigInt>& h) { return diameter(as_tuple(h)); }, py::arg("tuple"));
    m.def("is_difference_smooth", [](const std::vector<BigInt>& h, uint64_t y) {
        return to_python(to_json(is_difference_smooth(as_tuple(h), y), y));
    }, py::arg("tuple"), py::arg("y"));
    m.def("construct_primorial_tuple", [](uint64_t k) { return elements(construct_primorial_tuple(k)); },
          py::arg("k"));
    m.def("construct_consecutive_prime_tuple",
          [](uint64_t k) { return elements(construct_consecutive_prime_tuple(k)); }, py::arg("k"));
    m.def("find_smoothness_witness", [](const std::vector<BigInt>& h) {
        IntegerTuple t = as_tuple(h);
        return to_python(to_json(find_smoothness_witness(t), t));
    }, py::arg("tuple"));
    m.def("parse_tuples", [](const std::string& text) {
        std::vector<std::vector<BigInt>> out;
        for (const IntegerTuple& t : parse_tuples(text)) out.push_back(elements(t));
        return out;
    }, py::arg("text"));
    m.def("format_tuple", [](const std::vector<BigInt>& h) { return format_tuple(as_tuple(h)); },
          py::arg("tuple"));

    // searches release the GIL; they touch no Python state
    m.def("search_min_diameter_admissible", [](uint64_t k, uint64_t budget) {
        SearchResult r;
        {
            py::gil_scoped_release release;
            r = search_min_diameter_admissible(k, budget);
        }
        return to_python(to_json(r));
    }, py::arg("k"), py::arg("budget") = 1'000'000);
    m.def("search_min_diameter_difference_smooth", [](uint64_t k, uint64_t y, uint64_t budget) {
        SearchResult r;
        {
            py::gil_scoped_release release;
            r = search_min_diameter_difference_smooth(k, y, budget);
        }
        return to_python(to_json(r));
    }, py::arg("k"), py::arg("y"), py::arg("budget") = 1'000'000);

    // constants
    m.def("singular_series", [](const std::vector<BigInt>& h, uint64_t cutoff) {
        return to_python(to_json(singular_series(as_tuple(h), cutoff)));
    }, py::arg("tuple"), py::arg("prime_cutoff"));
    m.def("hl_prediction", [](const std::vector<BigInt>& h, double x, const std::string& mode, uint64_t cutoff) {
        return hl_prediction(as_tuple(h), x, parse_form(mode), cutoff);
    }, py::arg("tuple"), py::arg("x"), py::arg("mode") = "integral", py::arg("prime_cutoff") = 0);
    m.def("km_table", [] {
        py::list out;
        for (const KmEntry& e : km_table()) out.append(to_python(to_json(e)));
        return out;
    });

    // scan
    m.def("scan", [](const std::string& mode, uint64_t x, std::optional<uint64_t> y,
                     std::optional<std::vector<BigInt>> tuple, std::vector<uint64_t> checkpoints,
                     bool include_gap_one, std::optional<uint64_t> at_least_m, uint64_t segment_size,
                     unsigned threads) {
        ScanRequest req;
        if (mode == "pairs") {
            req.mode = ScanMode::kPairs;
        } else if (mode == "consecutive-pairs") {
            req.mode = ScanMode::kConsecutivePairs;
        } else if (mode == "tuple-translates") {
            req.mode = ScanMode::kTupleTranslates;
        } else {
            throw DomainError("unknown scan mode " + mode);
        }
        req.x_max = x;
        req.y = y;
        if (tuple) req.tuple = as_tuple(*tuple);
        req.checkpoints = std::move(checkpoints);
        req.include_gap_one = include_gap_one;
        req.at_least_m = at_least_m;
        ScanOptions opt;
        opt.segment_size = segment_size;
        opt.threads = threads;
        ScanReport report;
        {
            py::gil_scoped_release release;
            report = run_scan(req, opt);
        }
        return to_python(to_json(report));
    }, py::arg("mode"), py::arg("x"), py::arg("y") = py::none(), py::arg("tuple") = py::none(),
       py::arg("checkpoints") = std::vector<uint64_t>{}, py::arg("include_gap_one") = true,
       py::arg("at_least_m") = py::none(), py::arg("segment_size") = kDefaultSegmentSize,
       py::arg("threads") = 1);
}
