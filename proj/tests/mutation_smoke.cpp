// Linked against a library build whose exact-count formula has an off-by-one
// exponent. The verify suite must notice.

#include <iostream>
#include <sstream>

#include "lcseq/verify.hpp"

int main() {
  std::ostringstream report;
  const int failures = lcseq::run_verify("all", report);
  std::cout << report.str();
  if (failures == 0) {
    std::cout << "mutant survived: verify reported no failures\n";
    return 1;
  }
  std::cout << "mutant caught by " << failures << " check(s)\n";
  return 0;
}
