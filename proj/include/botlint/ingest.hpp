#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "botlint/errors.hpp"

namespace botlint {

enum class LiteralKind { Number, String, Colour, Variable, Broadcast, Unknown };

// One normalized input slot value: either a reference to another block or a
// tagged literal.
struct RawInput {
    enum class Tag { Missing, BlockRef, Literal };
    Tag tag = Tag::Missing;
    std::string ref;                        // Tag::BlockRef
    LiteralKind kind = LiteralKind::Unknown;// Tag::Literal
    std::string text;

    static RawInput block_ref(std::string id) {
        RawInput v;
        v.tag = Tag::BlockRef;
        v.ref = std::move(id);
        return v;
    }
    static RawInput literal(LiteralKind kind, std::string text) {
        RawInput v;
        v.tag = Tag::Literal;
        v.kind = kind;
        v.text = std::move(text);
        return v;
    }
};

struct RawBlock {
    std::string opcode;
    std::optional<std::string> next;
    std::optional<std::string> parent;
    bool top_level = false;
    bool shadow = false;
    std::map<std::string, RawInput> inputs;
    std::map<std::string, std::string> fields;
};

struct Warning {
    std::string target;
    std::string block_id;
    std::string message;
};

struct RawTarget {
    std::string name;
    bool is_stage = false;
    std::string device;                        // "" for sprites/stage
    std::vector<std::pair<std::string, RawBlock>> blocks; // document order

    const RawBlock* find(const std::string& id) const;
    RawBlock* find(const std::string& id);
};

struct RawProject {
    std::vector<RawTarget> targets;
    std::string source_path;
};

// Reads a project container. Bare JSON files are decoded directly; zip archives
// are searched for the shallowest entry named project.json.
RawProject load_container(const std::string& path);

// Same, but from an in-memory buffer (used for synthetic projects and tests).
RawProject load_container_bytes(const std::string& bytes, const std::string& display_path);

// Validates id references within one target and drops dangling ones. Returns
// the warnings produced; the target is fixed up in place.
std::vector<Warning> decode_blocks(RawTarget& target);

// load_container + decode_blocks over every target.
RawProject load_project(const std::string& path, std::vector<Warning>& warnings);

} // namespace botlint
