#pragma once

#include <string>
#include <vector>

#include "grassmann/shape.hpp"

namespace grassmann {

struct CheckResult {
    std::string name;
    bool passed = true;
    bool skipped = false;     // capacity-limited check not applicable to this shape
    std::string detail;       // counterexample or skip reason
};

// Every cross-check the construction supports, run against one shape:
// weight complementarity and closed form, sign-vector dynamics against the
// checkered weights, reduced-word path independence, edge partition and the
// edge criterion, the SNF oracle against the GF(2) fast path, Betti numbers
// against the closed Poincare polynomial, Euler characteristic, duality,
// orientability, the cell-sum polynomials against their closed forms, point
// counts and reciprocity.
std::vector<CheckResult> run_checks(const GrassmannShape& shape, int capacity = default_capacity);

// Aggregated over all shapes 1 <= k < n <= max_n; detail reports the first
// failing shape per check.
std::vector<CheckResult> run_checks_up_to(int max_n, int capacity = default_capacity);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace grassmann
