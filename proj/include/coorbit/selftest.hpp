#pragma once

#include <string>
#include <vector>

#include "coorbit/config.hpp"

namespace coorbit {

struct SelftestResult {
    std::string name;
    double observed = 0.0;    // worst error seen
    double tolerance = 0.0;
    bool passed = false;
};

/// Runs the invariant suite (Parseval, inversion, fast-path agreement,
/// tensor factorization, kernel round trip, Schur exactness, ...) at size n.
/// Independent checks may run on `threads` workers; results are assembled in
/// fixed order so the outcome is deterministic.
std::vector<SelftestResult> run_selftest_suite(int n, unsigned seed, bool inject_nan,
                                               int threads = 1);

}  // namespace coorbit
