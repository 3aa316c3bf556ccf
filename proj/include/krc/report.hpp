#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace krc {

/* Outcome of one identity sweep.  failures holds one description per
 * counterexample, each carrying the full intermediate chain; an empty
 * list is the pass condition. */
struct VerifierReport {
    std::string label;
    int64_t checked = 0;
    std::vector<std::string> failures;
    double millis = 0.0;

    bool pass() const { return failures.empty(); }
};

} /* namespace krc */
