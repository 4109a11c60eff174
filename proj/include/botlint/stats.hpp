#pragma once

#include <span>

#include "botlint/errors.hpp"

namespace botlint {

struct MannWhitneyResult {
    double u = 0;       // U statistic of the first sample (pairs won by A)
    double p_value = 1; // two-sided, normal approximation
};

// Rank-sum U with midranks for ties; p from the normal approximation with
// tie-corrected variance and continuity correction. Internally cross-checked
// against direct pair counting.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

// (#(a>b) + 0.5 * #(a=b)) / (|A| * |B|)
double vargha_delaney_a12(std::span<const double> a, std::span<const double> b);

} // namespace botlint
