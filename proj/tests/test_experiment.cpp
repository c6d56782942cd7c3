// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>

#include <json.hpp>

#include "qpenc/experiment.hpp"
#include "qpenc/runners.hpp"

using namespace qpenc;

TEST_SUITE_BEGIN("experiment");

TEST_CASE("doubles round-trip through their text form") {
    for (double v : {0.0, 1.0, 0.5, 1.0 / 3.0, 0.70710678118654752440, 1e-13, 2.5e17, -0.25}) {
        const std::string text = format_double(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv rows carry the full schema in order") {
    ExperimentRecord r = make_record("demo", 7, 0.5, 0.25);
    r.k = 2;
    r.n = 3;
    r.N = 64;
    r.L = 8;
    r.l = 4;
    r.trials = 100;
    CHECK(to_csv_row(r) == "demo,2,3,64,8,4,7,100,0.5,0.25,0.25,0");
    CHECK(std::string(kCsvHeader) ==
          "experiment,k,n,N,L,l,seed,trials,observed,analytic,abs_err,wall_ms");
}

TEST_CASE("json output parses back losslessly") {
    const auto records = run_complexity_grid(7);
    const auto doc = nlohmann::json::parse(json_string(records));
    REQUIRE(doc.at("records").size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& row = doc.at("records").at(i);
        CHECK(row.at("experiment").get<std::string>() == records[i].experiment);
        CHECK(row.at("observed").get<double>() == records[i].observed);
        CHECK(row.at("analytic").get<double>() == records[i].analytic);
        CHECK(row.at("seed").get<std::uint64_t>() == records[i].seed);
    }
}

TEST_CASE("repeated runs serialize to identical bytes") {
    const auto first = run_distance({1, 2, 3}, 7);
    const auto second = run_distance({1, 2, 3}, 7);
    CHECK(csv_string(first) == csv_string(second));
    CHECK(json_string(first) == json_string(second));
}

TEST_CASE("plaintext tables cover every pair with in-range distances") {
    const auto records = run_plaintext_table(2, 2, 7);
    CHECK(records.size() == 6);  // pairs of the four 2-bit plaintexts
    for (const auto& r : records) {
        CHECK(r.observed >= 0.0);
        CHECK(r.observed <= 1.0);
    }
    // Complementary pair: both blocks differ, so the distance exceeds the
    // single-pair value 1/2.
    CHECK(records.front().experiment == "plaintext-distance-00-vs-01");
    for (const auto& r : records)
        if (r.experiment == "plaintext-distance-00-vs-11") CHECK(r.observed >= 0.5 - 1e-12);
}

TEST_SUITE_END();
