#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pw {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    bool skipped = false; // criteria conditional on optional inputs
    std::string detail;   // evidence on pass, reason on failure
    double seconds = 0.0;
};

struct AcceptanceOptions {
    // directory of .ctbl files for groups too large to enumerate; the
    // corresponding criterion is skipped when empty
    std::string ingested_dir;
};

// Runs the full verification suite; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// Prints one line per criterion; returns true iff nothing failed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace pw
