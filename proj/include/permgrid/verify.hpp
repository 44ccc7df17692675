#pragma once

#include <string>
#include <vector>

namespace permgrid {

enum class VerifyLevel { quick, full };

/// One verification check. `provenance` records where the expected value
/// comes from (published expansion, independent brute force, definition, or a
/// cross-check of two routes).
struct CheckResult {
    int criterion = 0;
    std::string name;
    std::string expected;
    std::string actual;
    std::string provenance;
    bool pass = false;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string level;
    std::vector<CheckResult> checks;
    bool overall() const;
};

struct VerifyOptions {
    int jobs = 1;
};

/// Runs every acceptance check. Quick stays within length 8 / order 12; full
/// raises to length 10 / order 20.
VerificationReport run_verification(VerifyLevel level, const VerifyOptions& options = {});

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

}  // namespace permgrid
