#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcurve {

enum ExitCode { ExitOk = 0, ExitVerifyFailed = 1, ExitUsage = 2, ExitIo = 3 };

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    int passed() const;
    int failed() const;
};

VerifySummary run_verify(int sweep_max, bool inject_fault = false);

} // namespace tcurve
