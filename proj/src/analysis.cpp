#include "botlint/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <thread>

#include "botlint/stats.hpp"

namespace botlint {

namespace fs = std::filesystem;

ProjectResult analyze_file(const std::string& path, const AnalysisOptions& options) {
    const Registry& registry = options.registry ? *options.registry : Registry::builtin();

    ProjectResult result;
    result.path = path;
    Project project = load_and_build(path, registry);
    result.warnings = project.warnings;
    result.metrics = compute_metrics(project);
    result.issues = run_finders(project, options.finders);
    for (const Actor& actor : project.actors)
        if (actor.is_robot() && !actor.scripts.empty())
            result.robot_code_present = true;
    for (const Issue& issue : result.issues) {
        switch (issue.category) {
        case Category::Bug: ++result.bug_count; break;
        case Category::Smell: ++result.smell_count; break;
        case Category::Perfume: ++result.perfume_count; break;
        }
    }
    return result;
}

std::vector<std::string> discover_projects(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        std::string ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".zip" || ext == ".mblock")
            paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

CorpusResult analyze_corpus(const std::vector<std::string>& paths,
                            const CorpusOptions& options) {
    struct Slot {
        std::optional<ProjectResult> result;
        std::optional<SkippedFile> failure;
    };
    std::vector<Slot> slots(paths.size());

    // analysis order does not matter: results merge back by path index
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= paths.size())
                return;
            try {
                slots[i].result = analyze_file(paths[i], options.analysis);
            } catch (const std::exception& e) {
                slots[i].failure = SkippedFile{paths[i], e.what()};
            }
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || paths.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& thread : pool)
            thread.join();
    }

    CorpusResult out;
    for (Slot& slot : slots) {
        if (slot.failure) {
            out.load_failures.push_back(std::move(*slot.failure));
            continue;
        }
        if (options.filter_robot_code && !slot.result->robot_code_present) {
            out.filtered_out.push_back(slot.result->path);
            continue;
        }
        out.projects.push_back(std::move(*slot.result));
    }
    return out;
}

AggregateTable aggregate(const std::vector<ProjectResult>& projects,
                         const FinderOptions& include) {
    AggregateTable table;
    table.projects_analyzed = static_cast<long>(projects.size());

    std::map<std::string, PatternAggregate> rows;
    for (const auto& [id, category] : pattern::all_patterns()) {
        bool enabled = (category == Category::Bug && include.bugs) ||
                       (category == Category::Smell && include.smells) ||
                       (category == Category::Perfume && include.perfumes);
        if (!enabled)
            continue;
        PatternAggregate row;
        row.pattern_id = id;
        row.category = category;
        rows.emplace(id, std::move(row));
    }

    std::map<std::string, double> wmc_sums;
    double total_wmc_sum = 0;
    table.total.pattern_id = "total";

    for (const ProjectResult& project : projects) {
        std::map<std::string, long> per_pattern;
        for (const Issue& issue : project.issues) {
            auto it = rows.find(issue.pattern_id);
            if (it == rows.end())
                continue;
            it->second.instance_count += 1;
            per_pattern[issue.pattern_id] += 1;
        }
        long in_project = 0;
        for (const auto& [id, count] : per_pattern) {
            rows[id].project_count += 1;
            wmc_sums[id] += static_cast<double>(project.metrics.wmc);
            in_project += count;
        }
        if (in_project > 0) {
            table.total.instance_count += in_project;
            table.total.project_count += 1;
            total_wmc_sum += static_cast<double>(project.metrics.wmc);
        }
    }

    for (const auto& [id, category] : pattern::all_patterns()) {
        auto it = rows.find(id);
        if (it == rows.end())
            continue;
        PatternAggregate row = it->second;
        if (row.project_count > 0)
            row.mean_wmc = wmc_sums[id] / static_cast<double>(row.project_count);
        table.rows.push_back(std::move(row));
    }
    if (table.total.project_count > 0)
        table.total.mean_wmc = total_wmc_sum / static_cast<double>(table.total.project_count);
    return table;
}

std::vector<double> metric_vector(const std::vector<ProjectResult>& projects,
                                  const std::string& metric, bool per_block) {
    std::vector<double> out;
    out.reserve(projects.size());
    for (const ProjectResult& p : projects) {
        double value = 0;
        if (metric == "blocks")
            value = static_cast<double>(p.metrics.block_count);
        else if (metric == "scripts")
            value = static_cast<double>(p.metrics.script_count);
        else if (metric == "wmc")
            value = static_cast<double>(p.metrics.wmc);
        else if (metric == "longest")
            value = static_cast<double>(p.metrics.longest_script);
        else if (metric == "most-complex")
            value = static_cast<double>(p.metrics.most_complex_script);
        else if (metric == "bugs")
            value = static_cast<double>(p.bug_count);
        else if (metric == "smells")
            value = static_cast<double>(p.smell_count);
        else if (metric == "perfumes")
            value = static_cast<double>(p.perfume_count);
        else
            throw std::runtime_error("unknown metric: " + metric);
        if (per_block)
            value = p.metrics.block_count > 0
                        ? value / static_cast<double>(p.metrics.block_count)
                        : 0.0;
        out.push_back(value);
    }
    return out;
}

const std::vector<std::string>& default_compare_metrics() {
    static const std::vector<std::string> metrics{
        "blocks", "wmc", "scripts", "longest", "most-complex",
    };
    return metrics;
}

std::vector<ComparisonResult> compare_corpora(const std::vector<ProjectResult>& a,
                                              const std::vector<ProjectResult>& b,
                                              const std::vector<std::string>& metrics,
                                              bool per_block) {
    std::vector<ComparisonResult> out;
    for (const std::string& metric : metrics) {
        std::vector<double> va = metric_vector(a, metric, per_block);
        std::vector<double> vb = metric_vector(b, metric, per_block);
        if (va.empty() || vb.empty())
            throw EmptySampleError();
        ComparisonResult r;
        r.metric = metric;
        r.n1 = va.size();
        r.n2 = vb.size();
        for (double v : va)
            r.mean_a += v;
        r.mean_a /= static_cast<double>(va.size());
        for (double v : vb)
            r.mean_b += v;
        r.mean_b /= static_cast<double>(vb.size());
        MannWhitneyResult mw = mann_whitney_u(va, vb);
        r.u_statistic = mw.u;
        r.p_value = mw.p_value;
        r.a12 = vargha_delaney_a12(va, vb);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace botlint
