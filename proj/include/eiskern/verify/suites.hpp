#pragma once

#include <string>
#include <vector>

#include "eiskern/mpcore/precision.hpp"

// Acceptance checks shared by `eiskern verify` and the acceptance test binary.
namespace eiskern::verify {

enum class Suite { Brackets, Lvalues, Dbleis, Periods, Nonhol, All };
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct CheckItem {
  std::string label;
  bool pass = false;
  double residual = 0;
  double tolerance = 0;
  std::string note;
};

struct Criterion {
  int id = 0;
  std::string suite;
  std::string title;
  bool pass = false;
  double worst_ratio = 0;   // max residual / tolerance over items
  double runtime_limit = 0;  // seconds, 0 when the criterion has none
  double seconds = 0;        // measured; not part of emitted reports
  std::vector<CheckItem> items;
  std::string note;
};

struct Options {
  bool quick = false;
  unsigned long seed = 20240611UL;  // random sample points
};

// Criteria in declaration order; All runs 1..10.
std::vector<Criterion> run_suite(Suite suite, const PrecisionProfile& prof, const Options& opt = {});
Criterion run_criterion(int id, const PrecisionProfile& prof, const Options& opt = {});

// Criteria that cannot be met as stated; see the README for the analysis.
bool known_unattainable(const Criterion& c);

}  // namespace eiskern::verify
