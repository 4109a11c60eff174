#pragma once

#include "botlint/ast.hpp"

namespace botlint {

struct ProjectMetrics {
    long block_count = 0;
    long script_count = 0;
    long wmc = 0;                 // sum of per-script cyclomatic complexities
    long longest_script = 0;      // statements incl. nested, plus the hat
    long most_complex_script = 0; // max cyclomatic, 0 without scripts
};

// 1 + number of decision constructs (If, IfElse, RepeatTimes, RepeatUntil,
// Forever, WaitUntil) in the script body.
long cyclomatic(const Script& script);

// Statement count incl. nested statements, plus one for the hat.
long script_length(const Script& script);

ProjectMetrics compute_metrics(const Project& project);

} // namespace botlint
