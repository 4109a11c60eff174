#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "botlint/issue.hpp"

namespace botlint {

// Localized hint templates, loaded from JSON and editable without rebuilds.
class HintCatalog {
public:
    static HintCatalog from_json_text(const std::string& text);
    static HintCatalog load_file(const std::string& path);
    static const HintCatalog& builtin();

    // Template for (pattern, language) with {placeholder} slots substituted
    // from issue.params; languages without a template fall back to "en".
    std::string resolve(const Issue& issue, const std::string& language) const;
    std::string resolve(const std::string& pattern_id, const std::string& language,
                        const std::map<std::string, std::string>& params) const;

    bool has_pattern(const std::string& pattern_id) const;
    std::vector<std::string> languages(const std::string& pattern_id) const;
    const std::map<std::string, std::map<std::string, std::string>>& patterns() const {
        return patterns_;
    }

    static std::set<std::string> placeholders(const std::string& hint_template);

private:
    void validate() const;

    // pattern id -> language -> template
    std::map<std::string, std::map<std::string, std::string>> patterns_;
};

} // namespace botlint
