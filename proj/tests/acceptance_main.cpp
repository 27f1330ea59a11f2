#include <cstdlib>
#include <iostream>

#include "pwidth/acceptance.hpp"

// Full verification suite; one pass/fail line per criterion. The optional
// argument is a directory of .ctbl files for groups beyond the enumeration
// bound (also read from $PWIDTH_TABLES).
int main(int argc, char** argv) {
    pw::AcceptanceOptions opt;
    if (argc > 1) opt.ingested_dir = argv[1];
    else if (const char* env = std::getenv("PWIDTH_TABLES")) opt.ingested_dir = env;
    const auto results = pw::run_acceptance(opt);
    return pw::report_acceptance(results, std::cout) ? 0 : 1;
}
