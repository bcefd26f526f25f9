#pragma once

#include <string>
#include <vector>

namespace chaincalc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // mismatch description or error text when failing
};

/// Run the full battery of worked-example checks (the 49/34 suite, the flip
/// figure, the B_{n,1} identities, class-W base cases, CLI text goldens).
/// Every check is executed; exceptions are captured as failures.
std::vector<CheckResult> verify_paper();

}  // namespace chaincalc
