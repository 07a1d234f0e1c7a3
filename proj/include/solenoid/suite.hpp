#pragma once

// The standing verification matrix.  Every construction family is exercised
// at several parameter choices; each yields an equation row (grid verdict
// against the expected one), a classification row (both factors land in
// their expected classes), and an implication row (the identity carries over
// to independence of the paired transformed forms).  Torsion families add
// finite-quotient crossvalidation rows where the functional-equation road
// and the exact enumeration road must agree; negative controls are rows
// whose expected verdict is a violation, so a checker that always says yes
// cannot pass.  Entries are aggregated in sorted name order, which makes the
// suite output deterministic byte for byte.

#include "solenoid/constructions.hpp"
#include "solenoid/finmodel.hpp"
#include "solenoid/json_io.hpp"

namespace solenoid {

struct SuiteEntry {
    std::string name;      // unique; sorted for aggregation
    std::string category;  // construct | control | crossvalidate | fault-drill
    bool passed = false;
    std::string detail;  // one line
    Json report;         // full sub-report
};

enum class SuiteLevel { Small, Full };

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::Small;
    // Plants a non-semidefinite table behind the validator's back and adds a
    // forced-red row recording whether psd_check caught it.  The suite then
    // cannot pass: the drill proves a red result is reachable.
    bool inject_fault = false;
};

struct SuiteResult {
    std::vector<SuiteEntry> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool ok() const { return failed == 0; }
};

SuiteResult run_suite(const SuiteOptions& opts);

Json suite_json(const SuiteResult& r);

}  // namespace solenoid
