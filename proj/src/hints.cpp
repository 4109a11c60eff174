#include "botlint/hints.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace botlint {

namespace {
using Json = nlohmann::ordered_json;
}

HintCatalog HintCatalog::from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("hint catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("hints") || !doc["hints"].is_object())
        throw std::runtime_error("hint catalog needs a 'hints' object");

    HintCatalog catalog;
    for (auto it = doc["hints"].begin(); it != doc["hints"].end(); ++it) {
        std::map<std::string, std::string> by_lang;
        for (auto lang = it.value().begin(); lang != it.value().end(); ++lang)
            by_lang.emplace(lang.key(), lang.value().get<std::string>());
        catalog.patterns_.emplace(it.key(), std::move(by_lang));
    }
    catalog.validate();
    return catalog;
}

HintCatalog HintCatalog::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open hint catalog: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void HintCatalog::validate() const {
    for (const auto& [pattern, by_lang] : patterns_) {
        auto en = by_lang.find("en");
        if (en == by_lang.end())
            throw std::runtime_error("hint catalog: pattern '" + pattern +
                                     "' has no 'en' template");
        auto expected = placeholders(en->second);
        for (const auto& [lang, text] : by_lang) {
            if (placeholders(text) != expected)
                throw std::runtime_error("hint catalog: pattern '" + pattern +
                                         "' uses different placeholders in '" + lang +
                                         "' than in 'en'");
        }
    }
}

std::set<std::string> HintCatalog::placeholders(const std::string& hint_template) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < hint_template.size(); ++i) {
        if (hint_template[i] != '{')
            continue;
        auto end = hint_template.find('}', i);
        if (end == std::string::npos)
            break;
        out.insert(hint_template.substr(i + 1, end - i - 1));
        i = end;
    }
    return out;
}

std::string HintCatalog::resolve(const std::string& pattern_id, const std::string& language,
                                 const std::map<std::string, std::string>& params) const {
    auto it = patterns_.find(pattern_id);
    if (it == patterns_.end())
        throw UnknownPatternError(pattern_id);
    auto lang_it = it->second.find(language);
    if (lang_it == it->second.end())
        lang_it = it->second.find("en");
    if (lang_it == it->second.end())
        throw UnknownPatternError(pattern_id);

    std::string out;
    const std::string& tmpl = lang_it->second;
    out.reserve(tmpl.size());
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == '{') {
            auto end = tmpl.find('}', i);
            if (end != std::string::npos) {
                std::string key = tmpl.substr(i + 1, end - i - 1);
                auto param = params.find(key);
                if (param != params.end()) {
                    out += param->second;
                    i = end;
                    continue;
                }
            }
        }
        out += tmpl[i];
    }
    return out;
}

std::string HintCatalog::resolve(const Issue& issue, const std::string& language) const {
    return resolve(issue.hint_key.empty() ? issue.pattern_id : issue.hint_key, language,
                   issue.params);
}

bool HintCatalog::has_pattern(const std::string& pattern_id) const {
    return patterns_.count(pattern_id) > 0;
}

std::vector<std::string> HintCatalog::languages(const std::string& pattern_id) const {
    std::vector<std::string> out;
    auto it = patterns_.find(pattern_id);
    if (it != patterns_.end())
        for (const auto& [lang, text] : it->second)
            out.push_back(lang);
    return out;
}

} // namespace botlint
