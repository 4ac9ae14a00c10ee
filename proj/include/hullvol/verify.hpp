#pragma once

#include <string>
#include <vector>

namespace hullvol {

struct CheckResult {
    std::string name;
    bool pass;
    double measured;
    double expected;
    std::string detail;
};

/// Suite names: thm1, thm2, thm3, thm4, thm5, corollaries, identities.
std::vector<std::string> verify_suite_names();

/// Runs one verification suite; unknown names throw GeometryError.
std::vector<CheckResult> verify_suite(const std::string& suite);

}  // namespace hullvol
