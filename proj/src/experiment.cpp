// SPDX-License-Identifier: Apache-2.0
#include "qpenc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qpenc/version.hpp"

namespace qpenc {

ExperimentRecord make_record(std::string experiment, std::uint64_t seed, double observed,
                             double analytic) {
    ExperimentRecord r;
    r.experiment = std::move(experiment);
    r.seed = seed;
    r.observed = observed;
    r.analytic = analytic;
    r.abs_err = std::abs(observed - analytic);
    return r;
}

std::string format_double(double value) {
    // Shortest representation that parses back to the same double.
    for (int precision = 1; precision <= 17; ++precision) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) return buf;
    }
    return "0";
}

const char* const kCsvHeader = "experiment,k,n,N,L,l,seed,trials,observed,analytic,abs_err,wall_ms";

std::string to_csv_row(const ExperimentRecord& r) {
    std::ostringstream row;
    row << r.experiment << ',' << r.k << ',' << r.n << ',' << r.N << ',' << r.L << ',' << r.l
        << ',' << r.seed << ',' << r.trials << ',' << format_double(r.observed) << ','
        << format_double(r.analytic) << ',' << format_double(r.abs_err) << ','
        << format_double(r.wall_ms);
    return row.str();
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << "# " << kVersion << "\n" << kCsvHeader << "\n";
    for (const auto& r : records) out << to_csv_row(r) << "\n";
}

void write_json(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["experiment"] = r.experiment;
        row["k"] = r.k;
        row["n"] = r.n;
        row["N"] = r.N;
        row["L"] = r.L;
        row["l"] = r.l;
        row["seed"] = r.seed;
        row["trials"] = r.trials;
        row["observed"] = r.observed;
        row["analytic"] = r.analytic;
        row["abs_err"] = r.abs_err;
        row["wall_ms"] = r.wall_ms;
        doc["records"].push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
}

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    return out;
}

}  // namespace

void write_csv_file(const std::string& path, const std::vector<ExperimentRecord>& records) {
    auto out = open_or_throw(path);
    write_csv(out, records);
}

void write_json_file(const std::string& path, const std::vector<ExperimentRecord>& records) {
    auto out = open_or_throw(path);
    write_json(out, records);
}

std::string csv_string(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    write_csv(out, records);
    return out.str();
}

std::string json_string(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    write_json(out, records);
    return out.str();
}

}  // namespace qpenc
