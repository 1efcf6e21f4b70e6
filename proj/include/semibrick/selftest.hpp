#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semibrick {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Invariant suites over the preset universes (A1 bound 3, A2 bound (2,2),
/// A3 bound (1,1,1), all over F_2). Timings go to `log`, never into results.
std::vector<SelftestCheck> run_selftest(std::ostream& log);

}  // namespace semibrick
