#pragma once

#include "eiskern/io/report.hpp"

// Command implementations behind the `eiskern` executable. Each reads its inputs from
// cfg.parameters and returns the report; DomainError and ConvergenceError propagate.
namespace eiskern::io {

inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitVerifyFailed = 4;

Report cmd_qexp(const RunConfig& cfg);        // ek | delta, N
Report cmd_eigenforms(const RunConfig& cfg);  // weight, N
Report cmd_lvalue(const RunConfig& cfg);      // weight, s, index, twist
Report cmd_periods(const RunConfig& cfg);     // weight, index, dmax
Report cmd_dbleis(const RunConfig& cfg);      // weight, s, w, twist
// sub = eisenstein | kernel | direct | maass-lstar | cpl
Report cmd_nonhol(const RunConfig& cfg);
// suite, quick; status is kExitVerifyFailed when any criterion fails.
Report cmd_verify(const RunConfig& cfg);

Report run_command(const RunConfig& cfg);

}  // namespace eiskern::io
