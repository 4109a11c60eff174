#include "botlint/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "botlint/zipio.hpp"

#include "json.hpp"

namespace botlint {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError(LoadErrorKind::NotFound, path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// sb3-style numeric literal type codes
LiteralKind literal_kind_from_code(int code) {
    switch (code) {
    case 4: case 5: case 6: case 7: case 8:
        return LiteralKind::Number;
    case 9:
        return LiteralKind::Colour;
    case 10:
        return LiteralKind::String;
    case 11:
        return LiteralKind::Broadcast;
    case 12: case 13:
        return LiteralKind::Variable;
    default:
        return LiteralKind::Unknown;
    }
}

RawInput parse_literal_array(const Json& arr) {
    if (arr.empty() || !arr[0].is_number_integer())
        return RawInput::literal(LiteralKind::Unknown, arr.dump());
    LiteralKind kind = literal_kind_from_code(arr[0].get<int>());
    std::string text;
    if (arr.size() > 1) {
        const Json& v = arr[1];
        if (v.is_string())
            text = v.get<std::string>();
        else if (v.is_number())
            text = Json(v).dump();
    }
    return RawInput::literal(kind, std::move(text));
}

RawInput parse_input(const Json& value) {
    if (value.is_string())
        return RawInput::block_ref(value.get<std::string>());
    if (value.is_number())
        return RawInput::literal(LiteralKind::Number, value.dump());
    if (value.is_null())
        return RawInput{};
    if (!value.is_array())
        return RawInput::literal(LiteralKind::Unknown, value.dump());

    // [shadowState, value, obscuredShadow?]: first non-null payload wins
    std::size_t first = value.size() > 1 && value[0].is_number_integer() ? 1 : 0;
    for (std::size_t i = first; i < value.size(); ++i) {
        const Json& v = value[i];
        if (v.is_null())
            continue;
        if (v.is_string())
            return RawInput::block_ref(v.get<std::string>());
        if (v.is_array())
            return parse_literal_array(v);
        if (v.is_number())
            return RawInput::literal(LiteralKind::Number, v.dump());
    }
    return RawInput{};
}

RawBlock parse_block(const Json& j, const std::string& path) {
    if (!j.is_object())
        throw LoadError(LoadErrorKind::MalformedJson, path, "block is not an object");
    RawBlock b;
    b.opcode = j.value("opcode", std::string{});
    if (j.contains("next") && j["next"].is_string())
        b.next = j["next"].get<std::string>();
    if (j.contains("parent") && j["parent"].is_string())
        b.parent = j["parent"].get<std::string>();
    b.top_level = j.contains("topLevel") ? j.value("topLevel", false) : !b.parent.has_value();
    b.shadow = j.value("shadow", false);
    if (j.contains("inputs") && j["inputs"].is_object()) {
        for (auto it = j["inputs"].begin(); it != j["inputs"].end(); ++it)
            b.inputs.emplace(it.key(), parse_input(it.value()));
    }
    if (j.contains("fields") && j["fields"].is_object()) {
        for (auto it = j["fields"].begin(); it != j["fields"].end(); ++it) {
            const Json& v = it.value();
            if (v.is_string())
                b.fields.emplace(it.key(), v.get<std::string>());
            else if (v.is_array() && !v.empty() && v[0].is_string())
                b.fields.emplace(it.key(), v[0].get<std::string>());
            else if (v.is_number())
                b.fields.emplace(it.key(), v.dump());
        }
    }
    return b;
}

RawProject parse_project_json(const std::string& text, const std::string& path) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LoadError(LoadErrorKind::MalformedJson, path, e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("targets") || !doc["targets"].is_array())
        throw LoadError(LoadErrorKind::MalformedJson, path, "missing targets array");

    RawProject project;
    project.source_path = path;
    std::set<std::string> seen_names;
    for (const Json& t : doc["targets"]) {
        if (!t.is_object())
            throw LoadError(LoadErrorKind::MalformedJson, path, "target is not an object");
        RawTarget target;
        target.name = t.value("name", std::string{});
        if (target.name.empty())
            target.name = "target" + std::to_string(project.targets.size() + 1);
        // target names must be unique; repeated names get a suffix
        std::string base = target.name;
        for (int n = 2; seen_names.count(target.name); ++n)
            target.name = base + "#" + std::to_string(n);
        seen_names.insert(target.name);

        target.is_stage = t.value("isStage", false);
        if (t.contains("device") && t["device"].is_string())
            target.device = t["device"].get<std::string>();
        if (t.contains("blocks") && t["blocks"].is_object()) {
            for (auto it = t["blocks"].begin(); it != t["blocks"].end(); ++it)
                target.blocks.emplace_back(it.key(), parse_block(it.value(), path));
        }
        project.targets.push_back(std::move(target));
    }
    if (project.targets.empty())
        throw LoadError(LoadErrorKind::MalformedJson, path, "project has no targets");
    return project;
}

std::size_t entry_depth(const std::string& name) {
    return static_cast<std::size_t>(std::count(name.begin(), name.end(), '/'));
}

std::string entry_basename(const std::string& name) {
    auto pos = name.find_last_of('/');
    return pos == std::string::npos ? name : name.substr(pos + 1);
}

} // namespace

const RawBlock* RawTarget::find(const std::string& id) const {
    for (const auto& [bid, block] : blocks)
        if (bid == id)
            return &block;
    return nullptr;
}

RawBlock* RawTarget::find(const std::string& id) {
    for (auto& [bid, block] : blocks)
        if (bid == id)
            return &block;
    return nullptr;
}

RawProject load_container_bytes(const std::string& bytes, const std::string& display_path) {
    if (!zipio::looks_like_zip(bytes))
        return parse_project_json(bytes, display_path);

    std::vector<zipio::ZipEntry> entries;
    try {
        entries = zipio::list_entries(bytes);
    } catch (const std::exception& e) {
        throw LoadError(LoadErrorKind::MalformedJson, display_path, e.what());
    }
    // shallowest project.json wins; directory order breaks ties
    const zipio::ZipEntry* best = nullptr;
    std::size_t best_depth = 0;
    for (const auto& e : entries) {
        if (entry_basename(e.name) != "project.json")
            continue;
        std::size_t depth = entry_depth(e.name);
        if (!best || depth < best_depth) {
            best = &e;
            best_depth = depth;
        }
    }
    if (!best)
        throw LoadError(LoadErrorKind::NoProjectEntry, display_path,
                        "zip archive contains no project.json entry");
    std::string text;
    try {
        text = zipio::read_entry(bytes, *best);
    } catch (const std::exception& e) {
        throw LoadError(LoadErrorKind::MalformedJson, display_path, e.what());
    }
    return parse_project_json(text, display_path);
}

RawProject load_container(const std::string& path) {
    if (!std::filesystem::exists(path))
        throw LoadError(LoadErrorKind::NotFound, path, "no such file");
    return load_container_bytes(read_file(path), path);
}

std::vector<Warning> decode_blocks(RawTarget& target) {
    std::vector<Warning> warnings;
    std::set<std::string> ids;
    for (const auto& [id, block] : target.blocks)
        ids.insert(id);

    auto warn = [&](const std::string& block_id, const std::string& message) {
        warnings.push_back(Warning{target.name, block_id, message});
    };

    for (auto& [id, block] : target.blocks) {
        if (block.next && !ids.count(*block.next)) {
            warn(*block.next, "dangling next reference from block '" + id +
                              "' to missing block '" + *block.next + "'");
            block.next.reset();
        }
        if (block.parent && !ids.count(*block.parent)) {
            warn(*block.parent, "dangling parent reference from block '" + id +
                                "' to missing block '" + *block.parent + "'");
            block.parent.reset();
            block.top_level = true;
        }
        for (auto& [slot, input] : block.inputs) {
            if (input.tag == RawInput::Tag::BlockRef && !ids.count(input.ref)) {
                warn(input.ref, "dangling input reference in block '" + id + "' slot '" +
                                slot + "' to missing block '" + input.ref + "'");
                input = RawInput{};
            }
        }
        if (block.top_level && block.parent) {
            warn(id, "top-level block '" + id + "' has a parent; parent link dropped");
            block.parent.reset();
        }
    }
    return warnings;
}

RawProject load_project(const std::string& path, std::vector<Warning>& warnings) {
    RawProject project = load_container(path);
    for (auto& target : project.targets) {
        auto ws = decode_blocks(target);
        warnings.insert(warnings.end(), ws.begin(), ws.end());
    }
    return project;
}

} // namespace botlint
