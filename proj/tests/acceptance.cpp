#include <cstdio>
#include <string>

#include "eiskern/verify/suites.hpp"

// One line per acceptance criterion. Exit status is 0 when every criterion passes or
// fails only in a way recorded as unattainable (see README).
int main() {
  using namespace eiskern;
  auto prof = PrecisionProfile::defaults();
  int unexpected = 0;
  for (int id = 1; id <= 10; ++id) {
    auto c = verify::run_criterion(id, prof);
    bool known = verify::known_unattainable(c);
    std::string failed;
    for (const auto& it : c.items) {
      if (it.pass) continue;
      char buf[48];
      std::snprintf(buf, sizeof buf, " (%.3g)", it.residual);
      failed += (failed.empty() ? "" : "; ") + it.label + buf;
    }
    std::printf("criterion %2d %s  %s  [%zu checks, worst residual/tolerance %.3g, %.1f s]%s%s\n", id,
                c.pass ? "PASS" : "FAIL", c.title.c_str(), c.items.size(), c.worst_ratio, c.seconds,
                failed.empty() ? "" : "  failing: ", failed.c_str());
    if (known) std::printf("             known unattainable at these tolerances; tracked, not a regression\n");
    if (!c.pass && !known) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
