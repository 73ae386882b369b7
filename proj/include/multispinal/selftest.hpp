#pragma once

#include <string>
#include <vector>

namespace multispinal {

struct SelftestLine {
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs. actual when failing
};

// Re-derives every published value of the bundled instances (psi tables,
// scales, integer matrices, determinants, verdicts, germ and witness facts)
// and checks them against the frozen constants. Used by the CLI selftest
// subcommand and the test suite.
std::vector<SelftestLine> run_selftest();

}  // namespace multispinal
