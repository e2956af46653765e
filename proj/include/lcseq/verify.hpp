#pragma once

#include <ostream>
#include <string_view>
#include <vector>

namespace lcseq {

// Suite names accepted by run_verify: "lfsr", "oss", "enumerate",
// "rsbridge" and "all".
std::vector<std::string_view> verify_suites();

// Runs the brute-force cross-checks of the named suite at desk-scale sizes,
// printing one "PASS <check>" or "FAIL <check>: <detail>" line per check.
// Returns the number of failed checks. Throws BadParams for unknown suites.
int run_verify(std::string_view suite, std::ostream& out);

}  // namespace lcseq
