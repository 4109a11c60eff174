#pragma once

#include <optional>
#include <string>
#include <vector>

#include "botlint/finders.hpp"
#include "botlint/hints.hpp"
#include "botlint/metrics.hpp"

namespace botlint {

struct AnalysisOptions {
    FinderOptions finders;
    const Registry* registry = nullptr; // null = builtin
};

struct ProjectResult {
    std::string path;
    ProjectMetrics metrics;
    std::vector<Issue> issues;
    std::vector<Warning> warnings;
    bool robot_code_present = false; // some codey/mcore actor has a script
    long bug_count = 0;
    long smell_count = 0;
    long perfume_count = 0;
};

// Full pipeline for one file. Throws LoadError.
ProjectResult analyze_file(const std::string& path, const AnalysisOptions& options = {});

struct CorpusOptions {
    AnalysisOptions analysis;
    bool filter_robot_code = false; // skip projects whose robot actors have no scripts
    int jobs = 1;
};

struct SkippedFile {
    std::string path;
    std::string reason;
};

struct CorpusResult {
    std::vector<ProjectResult> projects;   // path order
    std::vector<SkippedFile> load_failures;
    std::vector<std::string> filtered_out; // removed by the robot-code filter
};

// .json/.zip files under dir, recursively, sorted by path.
std::vector<std::string> discover_projects(const std::string& dir);

// Analyzes the given files with a worker pool; results are merged in path
// order regardless of job count. Per-file failures are collected, not fatal.
CorpusResult analyze_corpus(const std::vector<std::string>& paths,
                            const CorpusOptions& options = {});

struct PatternAggregate {
    std::string pattern_id;
    Category category = Category::Bug;
    long instance_count = 0;
    long project_count = 0;
    std::optional<double> mean_wmc; // unset while project_count == 0
};

struct AggregateTable {
    std::vector<PatternAggregate> rows; // one per pattern, bugs/smells/perfumes
    PatternAggregate total;             // all patterns combined
    long projects_analyzed = 0;
};

AggregateTable aggregate(const std::vector<ProjectResult>& projects,
                         const FinderOptions& include = {});

struct ComparisonResult {
    std::string metric;
    double mean_a = 0;
    double mean_b = 0;
    double u_statistic = 0;
    double p_value = 1;
    double a12 = 0.5;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

// Per-project values of a named metric: blocks, scripts, wmc, longest,
// most-complex, bugs, smells, perfumes. With per_block every value is divided
// by the project's block count.
std::vector<double> metric_vector(const std::vector<ProjectResult>& projects,
                                  const std::string& metric, bool per_block);

std::vector<ComparisonResult> compare_corpora(const std::vector<ProjectResult>& a,
                                              const std::vector<ProjectResult>& b,
                                              const std::vector<std::string>& metrics,
                                              bool per_block);

const std::vector<std::string>& default_compare_metrics();

} // namespace botlint
