// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qpenc {

// One result row. Parameters that do not apply to an experiment stay 0; the
// seed is always recorded. Serialization is lossless (shortest round-trip
// double formatting) and byte-stable for a fixed build.
struct ExperimentRecord {
    std::string experiment;
    long long k = 0;
    long long n = 0;
    long long N = 0;
    long long L = 0;
    long long l = 0;
    std::uint64_t seed = 0;
    long long trials = 0;
    double observed = 0.0;
    double analytic = 0.0;
    double abs_err = 0.0;
    double wall_ms = 0.0;
};

ExperimentRecord make_record(std::string experiment, std::uint64_t seed, double observed,
                             double analytic);

// Lossless text form of a double: shortest decimal that round-trips.
std::string format_double(double value);

extern const char* const kCsvHeader;
std::string to_csv_row(const ExperimentRecord& record);

// CSV: '#'-prefixed version line, header row, one row per record, LF, UTF-8.
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
// JSON: {"version": ..., "records": [...]} with stable field order.
void write_json(std::ostream& out, const std::vector<ExperimentRecord>& records);

void write_csv_file(const std::string& path, const std::vector<ExperimentRecord>& records);
void write_json_file(const std::string& path, const std::vector<ExperimentRecord>& records);

std::string csv_string(const std::vector<ExperimentRecord>& records);
std::string json_string(const std::vector<ExperimentRecord>& records);

}  // namespace qpenc
