#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "botlint/finders.hpp"
#include "botlint/queries.hpp"

namespace botlint::detail {

// Finders only inspect robot actors; loose blocks are never visited.
template <typename Fn>
void for_each_robot_actor(const Project& project, Fn&& fn) {
    for (const Actor& actor : project.actors)
        if (actor.is_robot())
            fn(actor);
}

inline Issue make_issue(std::string_view pattern_id, Category category,
                        const Actor& actor, const Script* script,
                        std::vector<std::string> block_ids) {
    Issue issue;
    issue.pattern_id = std::string(pattern_id);
    issue.category = category;
    issue.actor = actor.name;
    if (script)
        issue.script = script->index;
    issue.block_ids = std::move(block_ids);
    issue.hint_key = issue.pattern_id;
    return issue;
}

// shortest decimal form, e.g. 300 -> "300", 0.5 -> "0.5"
inline std::string format_number(double v) {
    if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
        std::ostringstream out;
        out << static_cast<long long>(v);
        return out.str();
    }
    std::ostringstream out;
    out << v;
    return out.str();
}

inline std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const std::string& id : ids) {
        if (!out.empty())
            out += ",";
        out += id;
    }
    return out;
}

// Statement walk with the enclosing-loop stack, scripts only, preorder.
using LoopStack = std::vector<const Stmt*>;
void walk_with_loops(const Script& script,
                     const std::function<void(const Stmt&, const LoopStack&)>& fn);

// One `sensor <op> literal` comparison found in a script, pre-classified into
// the useless / equals-check / correct partition.
enum class ComparisonClass { Useless, EqualsCheck, Correct };

struct ComparisonSite {
    const Script* script = nullptr;
    const Stmt* stmt = nullptr;
    SensorComparison cmp;
    RangeVerdict verdict = RangeVerdict::Satisfiable;
    ComparisonClass cls = ComparisonClass::Correct;
};

std::vector<ComparisonSite> collect_comparisons(const Actor& actor);

// Every motor power literal in the actor's scripts with its partition class.
struct MotorLiteralSite {
    const Script* script = nullptr;
    const Stmt* stmt = nullptr;
    double power = 0;
    MotorLiteralClass cls = MotorLiteralClass::Nothing;
};

std::vector<MotorLiteralSite> collect_motor_literals(const Actor& actor);

} // namespace botlint::detail
