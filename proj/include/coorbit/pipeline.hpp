#pragma once

#include "coorbit/config.hpp"
#include "coorbit/report.hpp"

namespace coorbit {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIO = 3;

/// Certification run: build frames, load the operator, certify per the
/// configured direction, write the report. Returns an exit code.
int run_certify(const Config& config);

/// Invariant suite at the configured size; prints a per-invariant table.
int run_selftest(const Config& config);

/// Cross-representation certification (representation1 != representation2).
int run_cross(const Config& config);

/// Norm table for an operator file, no certification direction needed.
int run_norms(const Config& config);

}  // namespace coorbit
