#include "botlint/report.hpp"

#include <sstream>

#include "json.hpp"

namespace botlint {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string semicolon_join(const std::vector<std::string>& values) {
    std::string out;
    for (const std::string& v : values) {
        if (!out.empty())
            out += ";";
        out += v;
    }
    return out;
}

Json metrics_json(const ProjectMetrics& m) {
    Json j;
    j["blocks"] = m.block_count;
    j["scripts"] = m.script_count;
    j["wmc"] = m.wmc;
    j["longest_script"] = m.longest_script;
    j["most_complex_script"] = m.most_complex_script;
    return j;
}

Json issue_json(const Issue& issue, const HintCatalog& hints, const std::string& language) {
    Json j;
    j["pattern_id"] = issue.pattern_id;
    j["category"] = std::string(category_name(issue.category));
    j["actor"] = issue.actor;
    if (issue.script)
        j["script"] = *issue.script;
    else
        j["script"] = nullptr;
    j["block_ids"] = issue.block_ids;
    j["hint"] = hints.resolve(issue, language);
    if (!issue.params.empty())
        j["params"] = issue.params;
    if (!issue.metadata.empty())
        j["metadata"] = issue.metadata;
    return j;
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "text")
        return ReportFormat::Text;
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    throw std::runtime_error("unknown format: " + name + " (expected text, json or csv)");
}

std::string serialize_report(const std::string& project_path,
                             const std::vector<Issue>& issues,
                             const ProjectMetrics& metrics,
                             const std::vector<Warning>& warnings,
                             ReportFormat format, const HintCatalog& hints,
                             const std::string& language) {
    switch (format) {
    case ReportFormat::Json: {
        Json j;
        j["schema"] = "botlint-report-1";
        j["project"] = project_path;
        j["metrics"] = metrics_json(metrics);
        Json list = Json::array();
        for (const Issue& issue : issues)
            list.push_back(issue_json(issue, hints, language));
        j["issues"] = std::move(list);
        Json warn = Json::array();
        for (const Warning& w : warnings) {
            Json wj;
            wj["target"] = w.target;
            wj["block_id"] = w.block_id;
            wj["message"] = w.message;
            warn.push_back(std::move(wj));
        }
        j["warnings"] = std::move(warn);
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::ostringstream out;
        out << "project,actor,script,pattern_id,category,block_ids,hint\n";
        for (const Issue& issue : issues) {
            out << csv_escape(project_path) << ',' << csv_escape(issue.actor) << ','
                << (issue.script ? std::to_string(*issue.script) : std::string{}) << ','
                << issue.pattern_id << ',' << category_name(issue.category) << ','
                << csv_escape(semicolon_join(issue.block_ids)) << ','
                << csv_escape(hints.resolve(issue, language)) << '\n';
        }
        return out.str();
    }
    case ReportFormat::Text: {
        std::ostringstream out;
        long bugs = 0, smells = 0, perfumes = 0;
        for (const Issue& issue : issues) {
            if (issue.category == Category::Bug)
                ++bugs;
            else if (issue.category == Category::Smell)
                ++smells;
            else
                ++perfumes;
        }
        out << project_path << ": " << bugs << " bug(s), " << smells << " smell(s), "
            << perfumes << " perfume(s)\n";
        out << "  metrics: blocks=" << metrics.block_count
            << " scripts=" << metrics.script_count << " wmc=" << metrics.wmc
            << " longest=" << metrics.longest_script
            << " most-complex=" << metrics.most_complex_script << "\n";
        std::string current_actor;
        for (const Issue& issue : issues) {
            if (issue.actor != current_actor) {
                current_actor = issue.actor;
                out << "  actor \"" << current_actor << "\"\n";
            }
            out << "    [" << category_name(issue.category) << "] " << issue.pattern_id;
            if (issue.script)
                out << " (script " << *issue.script << ")";
            if (!issue.block_ids.empty())
                out << " @ " << issue.block_ids.front();
            out << "\n      " << hints.resolve(issue, language) << "\n";
        }
        for (const Warning& w : warnings)
            out << "  warning: " << w.target << ": " << w.message << "\n";
        return out.str();
    }
    }
    return {};
}

} // namespace botlint
