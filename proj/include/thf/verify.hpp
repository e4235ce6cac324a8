// The acceptance sweep: every headline computation is recomputed and compared
// against an independent route or a frozen expected value.
#pragma once

#include <string>
#include <vector>

namespace thf {

struct CheckResult {
    std::string name;
    std::string anchor;  // rule being exercised
    bool pass = false;
    std::string detail;  // first failure found, empty on pass
};

std::vector<CheckResult> run_verification();

}  // namespace thf
