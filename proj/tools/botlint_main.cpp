#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "botlint/analysis.hpp"
#include "botlint/report.hpp"

namespace {

using botlint::AggregateTable;
using botlint::Category;
using botlint::ComparisonResult;
using botlint::ReportFormat;
using Json = nlohmann::ordered_json;

struct CommonFlags {
    std::string format = "text";
    std::string include = "bugs,smells,perfumes";
    std::string lang;
    std::string registry_path;
    std::string hints_path;
    std::string output;
    int jobs = 1;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_jobs) {
    cmd->add_option("--format", flags.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--include", flags.include,
                    "Comma-separated categories: bugs,smells,perfumes");
    cmd->add_option("--lang", flags.lang, "Hint language (default: BOTLINT_LANG or en)");
    cmd->add_option("--registry", flags.registry_path, "Override the built-in opcode registry");
    cmd->add_option("--hints", flags.hints_path, "Override the built-in hint catalog");
    cmd->add_option("--output", flags.output, "Write the report to a file instead of stdout");
    if (with_jobs)
        cmd->add_option("--jobs", flags.jobs, "Worker threads for corpus analysis")
            ->check(CLI::PositiveNumber);
}

botlint::FinderOptions parse_include(const std::string& text) {
    botlint::FinderOptions opts{false, false, false};
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "bugs")
            opts.bugs = true;
        else if (item == "smells")
            opts.smells = true;
        else if (item == "perfumes")
            opts.perfumes = true;
        else if (!item.empty())
            throw CLI::ValidationError("--include", "unknown category: " + item);
    }
    return opts;
}

std::string effective_language(const CommonFlags& flags) {
    if (!flags.lang.empty())
        return flags.lang;
    if (const char* env = std::getenv("BOTLINT_LANG"); env && *env)
        return env;
    return "en";
}

void emit(const CommonFlags& flags, const std::string& content) {
    if (flags.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(flags.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write output file: " + flags.output);
    out << content;
}

std::string format_mean(const std::optional<double>& v) {
    if (!v)
        return "";
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << *v;
    return out.str();
}

std::string aggregate_report(const AggregateTable& table,
                             const botlint::CorpusResult& corpus, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: {
        Json j;
        j["schema"] = "botlint-corpus-1";
        j["projects_analyzed"] = table.projects_analyzed;
        j["projects_skipped"] = corpus.load_failures.size();
        j["projects_filtered"] = corpus.filtered_out.size();
        Json rows = Json::array();
        for (const auto& row : table.rows) {
            Json r;
            r["pattern_id"] = row.pattern_id;
            r["category"] = std::string(category_name(row.category));
            r["instances"] = row.instance_count;
            r["projects"] = row.project_count;
            if (row.mean_wmc)
                r["mean_wmc"] = *row.mean_wmc;
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        Json total;
        total["instances"] = table.total.instance_count;
        total["projects"] = table.total.project_count;
        if (table.total.mean_wmc)
            total["mean_wmc"] = *table.total.mean_wmc;
        j["total"] = std::move(total);
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::ostringstream out;
        out << "pattern_id,category,instances,projects,mean_wmc\n";
        for (const auto& row : table.rows)
            out << row.pattern_id << ',' << category_name(row.category) << ','
                << row.instance_count << ',' << row.project_count << ','
                << format_mean(row.mean_wmc) << '\n';
        out << "total,ALL," << table.total.instance_count << ','
            << table.total.project_count << ',' << format_mean(table.total.mean_wmc)
            << '\n';
        return out.str();
    }
    case ReportFormat::Text: {
        std::ostringstream out;
        out << "analyzed " << table.projects_analyzed << " project(s), skipped "
            << corpus.load_failures.size() << ", filtered "
            << corpus.filtered_out.size() << "\n\n";
        out << "pattern                             category  instances  projects  mean WMC\n";
        auto line = [&](const botlint::PatternAggregate& row, std::string_view category) {
            out << row.pattern_id;
            for (std::size_t i = row.pattern_id.size(); i < 36; ++i)
                out << ' ';
            out << category;
            for (std::size_t i = category.size(); i < 10; ++i)
                out << ' ';
            std::string instances = std::to_string(row.instance_count);
            for (std::size_t i = instances.size(); i < 9; ++i)
                out << ' ';
            out << instances << "  ";
            std::string projects = std::to_string(row.project_count);
            for (std::size_t i = projects.size(); i < 8; ++i)
                out << ' ';
            out << projects << "  ";
            out << format_mean(row.mean_wmc) << "\n";
        };
        for (const auto& row : table.rows)
            line(row, category_name(row.category));
        line(table.total, "ALL");
        for (const auto& skip : corpus.load_failures)
            out << "skipped: " << skip.path << " (" << skip.reason << ")\n";
        return out.str();
    }
    }
    return {};
}

std::string comparison_report(const std::vector<ComparisonResult>& rows,
                              ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: {
        Json j;
        j["schema"] = "botlint-compare-1";
        Json list = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["metric"] = r.metric;
            row["mean_a"] = r.mean_a;
            row["mean_b"] = r.mean_b;
            row["u"] = r.u_statistic;
            row["p_value"] = r.p_value;
            row["a12"] = r.a12;
            row["n1"] = r.n1;
            row["n2"] = r.n2;
            list.push_back(std::move(row));
        }
        j["rows"] = std::move(list);
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::ostringstream out;
        out << "metric,mean_a,mean_b,p_value,a12,u,n1,n2\n";
        for (const auto& r : rows)
            out << r.metric << ',' << r.mean_a << ',' << r.mean_b << ',' << r.p_value
                << ',' << r.a12 << ',' << r.u_statistic << ',' << r.n1 << ',' << r.n2
                << '\n';
        return out.str();
    }
    case ReportFormat::Text: {
        std::ostringstream out;
        out << "metric          mean A    mean B    p-value     A12\n";
        for (const auto& r : rows) {
            out << r.metric;
            for (std::size_t i = r.metric.size(); i < 14; ++i)
                out << ' ';
            std::ostringstream cells;
            cells.precision(4);
            cells << std::fixed << "  " << r.mean_a << "  " << r.mean_b << "  "
                  << r.p_value << "  " << r.a12;
            out << cells.str() << "\n";
        }
        return out.str();
    }
    }
    return {};
}

struct LoadedConfig {
    botlint::Registry registry_storage;
    botlint::HintCatalog hints_storage;
    const botlint::Registry* registry = nullptr;
    const botlint::HintCatalog* hints = nullptr;
};

LoadedConfig load_config(const CommonFlags& flags) {
    LoadedConfig config;
    if (!flags.registry_path.empty()) {
        config.registry_storage = botlint::Registry::load_file(flags.registry_path);
        config.registry = &config.registry_storage;
    } else {
        config.registry = &botlint::Registry::builtin();
    }
    if (!flags.hints_path.empty()) {
        config.hints_storage = botlint::HintCatalog::load_file(flags.hints_path);
        config.hints = &config.hints_storage;
    } else {
        config.hints = &botlint::HintCatalog::builtin();
    }
    return config;
}

int run_check(const std::string& path, const CommonFlags& flags) {
    LoadedConfig config = load_config(flags);
    botlint::AnalysisOptions options;
    options.finders = parse_include(flags.include);
    options.registry = config.registry;

    botlint::ProjectResult result;
    try {
        result = botlint::analyze_file(path, options);
    } catch (const botlint::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string report = botlint::serialize_report(
        result.path, result.issues, result.metrics, result.warnings,
        botlint::parse_format(flags.format), *config.hints, effective_language(flags));
    emit(flags, report);
    return result.bug_count > 0 ? 1 : 0;
}

int run_corpus(const std::string& dir, const CommonFlags& flags, bool filter_robot_code) {
    LoadedConfig config = load_config(flags);
    botlint::CorpusOptions options;
    options.analysis.finders = parse_include(flags.include);
    options.analysis.registry = config.registry;
    options.filter_robot_code = filter_robot_code;
    options.jobs = flags.jobs;

    if (!std::filesystem::is_directory(dir)) {
        std::cerr << "error: not a directory: " << dir << "\n";
        return 2;
    }
    auto paths = botlint::discover_projects(dir);
    auto corpus = botlint::analyze_corpus(paths, options);
    for (const auto& skip : corpus.load_failures)
        std::cerr << "skipped: " << skip.path << " (" << skip.reason << ")\n";
    AggregateTable table = botlint::aggregate(corpus.projects, options.analysis.finders);
    emit(flags, aggregate_report(table, corpus, botlint::parse_format(flags.format)));
    return 0;
}

int run_metrics(const std::string& path, const CommonFlags& flags) {
    LoadedConfig config = load_config(flags);
    botlint::CorpusOptions options;
    options.analysis.registry = config.registry;
    // metrics need no finder runs
    options.analysis.finders = botlint::FinderOptions{false, false, false};
    options.jobs = flags.jobs;

    std::vector<std::string> paths;
    if (std::filesystem::is_directory(path))
        paths = botlint::discover_projects(path);
    else
        paths.push_back(path);
    auto corpus = botlint::analyze_corpus(paths, options);
    for (const auto& skip : corpus.load_failures)
        std::cerr << "skipped: " << skip.path << " (" << skip.reason << ")\n";
    if (corpus.projects.empty() && !corpus.load_failures.empty())
        return 2;

    ReportFormat format = botlint::parse_format(flags.format);
    if (format == ReportFormat::Json) {
        Json j;
        j["schema"] = "botlint-metrics-1";
        Json rows = Json::array();
        for (const auto& p : corpus.projects) {
            Json row;
            row["project"] = p.path;
            row["blocks"] = p.metrics.block_count;
            row["scripts"] = p.metrics.script_count;
            row["wmc"] = p.metrics.wmc;
            row["longest_script"] = p.metrics.longest_script;
            row["most_complex_script"] = p.metrics.most_complex_script;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        emit(flags, j.dump(2) + "\n");
    } else {
        // csv and text share the tabular shape
        std::ostringstream out;
        out << "project,blocks,scripts,wmc,longest_script,most_complex_script\n";
        for (const auto& p : corpus.projects)
            out << p.path << ',' << p.metrics.block_count << ',' << p.metrics.script_count
                << ',' << p.metrics.wmc << ',' << p.metrics.longest_script << ','
                << p.metrics.most_complex_script << '\n';
        emit(flags, out.str());
    }
    return 0;
}

int run_compare(const std::string& dir_a, const std::string& dir_b,
                const CommonFlags& flags, const std::string& metrics_arg, bool per_block,
                bool filter_robot_code) {
    LoadedConfig config = load_config(flags);
    botlint::CorpusOptions options;
    options.analysis.registry = config.registry;
    options.filter_robot_code = filter_robot_code;
    options.jobs = flags.jobs;

    std::vector<std::string> metrics;
    if (metrics_arg.empty()) {
        metrics = botlint::default_compare_metrics();
    } else {
        std::stringstream in(metrics_arg);
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty())
                metrics.push_back(item);
    }

    for (const std::string& dir : {dir_a, dir_b}) {
        if (!std::filesystem::is_directory(dir)) {
            std::cerr << "error: not a directory: " << dir << "\n";
            return 2;
        }
    }
    auto corpus_a = botlint::analyze_corpus(botlint::discover_projects(dir_a), options);
    auto corpus_b = botlint::analyze_corpus(botlint::discover_projects(dir_b), options);
    if (corpus_a.projects.empty() || corpus_b.projects.empty()) {
        std::cerr << "error: empty corpus\n";
        return 2;
    }
    auto rows = botlint::compare_corpora(corpus_a.projects, corpus_b.projects, metrics,
                                         per_block);
    emit(flags, comparison_report(rows, botlint::parse_format(flags.format)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"botlint - pattern analysis for block-based robot programs"};
    app.require_subcommand(1);

    CommonFlags check_flags, corpus_flags, metrics_flags, compare_flags;
    std::string check_path, corpus_dir, metrics_path, compare_a, compare_b;
    std::string compare_metrics;
    bool corpus_filter = false, compare_filter = false, compare_per_block = false;

    CLI::App* check = app.add_subcommand("check", "Analyze a single project");
    check->add_option("path", check_path, "Project file (.json or .zip)")->required();
    add_common_flags(check, check_flags, false);

    CLI::App* corpus = app.add_subcommand("corpus", "Analyze every project under a directory");
    corpus->add_option("dir", corpus_dir, "Corpus directory")->required();
    corpus->add_flag("--filter-robot-code", corpus_filter,
                     "Skip projects whose robot actors contain no scripts");
    add_common_flags(corpus, corpus_flags, true);

    CLI::App* metrics = app.add_subcommand("metrics", "Code metrics per project");
    metrics->add_option("path", metrics_path, "Project file or directory")->required();
    add_common_flags(metrics, metrics_flags, true);

    CLI::App* compare = app.add_subcommand("compare", "Compare two corpora statistically");
    compare->add_option("dirA", compare_a, "First corpus directory")->required();
    compare->add_option("dirB", compare_b, "Second corpus directory")->required();
    compare->add_option("--metrics", compare_metrics,
                        "Comma-separated metrics (blocks, wmc, scripts, longest, "
                        "most-complex, bugs, smells, perfumes)");
    compare->add_flag("--per-block", compare_per_block,
                      "Divide per-project values by the project's block count");
    compare->add_flag("--filter-robot-code", compare_filter,
                      "Skip projects whose robot actors contain no scripts");
    add_common_flags(compare, compare_flags, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_path, check_flags);
        if (corpus->parsed())
            return run_corpus(corpus_dir, corpus_flags, corpus_filter);
        if (metrics->parsed())
            return run_metrics(metrics_path, metrics_flags);
        if (compare->parsed())
            return run_compare(compare_a, compare_b, compare_flags, compare_metrics,
                               compare_per_block, compare_filter);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
