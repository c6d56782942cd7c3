// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpenc/experiment.hpp"

namespace qpenc {

struct CriterionResult {
    int index;
    std::string name;
    bool pass;
    std::string detail;
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;
    std::vector<ExperimentRecord> records;
    bool all_pass() const;
};

// Runs the full verification suite at its pinned parameters and tolerances
// and collects every produced record. The determinism criterion regenerates
// the record set from scratch and compares serialized bytes.
SelftestReport run_selftest(std::uint64_t seed);

// The canonical record set of the suite (used twice by the determinism
// criterion, and written to disk by the CLI).
std::vector<ExperimentRecord> selftest_records(std::uint64_t seed);

}  // namespace qpenc
