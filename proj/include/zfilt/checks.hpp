#ifndef ZFILT_CHECKS_HPP
#define ZFILT_CHECKS_HPP

#include <string>
#include <vector>

namespace zfilt {

/// One cross-validation criterion: an independently derived oracle compared
/// exactly (tolerance 0) against the production pipeline.
struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // compared values, or the failure/exception message
};

/// Runs the full cross-validation suite (15 checks).  Never throws: a check
/// that raises is reported as failed with the exception message.
std::vector<CheckResult> run_all_checks();

} // namespace zfilt

#endif
