#include <cmath>

#include "finders_common.hpp"

namespace botlint {

using detail::ComparisonClass;
using detail::for_each_robot_actor;
using detail::format_number;
using detail::make_issue;

// All components of a colour literal group are integers within 0..255.
std::vector<Issue> find_colour_usage(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            for_each_stmt(script, [&](const Stmt& stmt) {
                auto colours = colour_components(stmt);
                if (!colours || !colours->all_literal || colours->values.empty())
                    return;
                for (double v : colours->values)
                    if (v < 0 || v > 255 || v != std::floor(v))
                        return;
                issues.push_back(make_issue(pattern::kColourUsage, Category::Perfume,
                                            actor, &script, {stmt.block_id}));
            });
        }
    });
    return issues;
}

// Comparisons that stay inside the valid range and are neither useless nor an
// exact check on an unrounded sensor.
std::vector<Issue> find_correct_sensing(const Project& project, Sensor sensor) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const auto& site : detail::collect_comparisons(actor)) {
            if (site.cls != ComparisonClass::Correct || site.cmp.sensor != sensor)
                continue;
            SensorRange range = sensor_range(sensor, *actor.device);
            Issue issue = make_issue(pattern::correct_sensing(sensor), Category::Perfume,
                                     actor, site.script,
                                     {site.cmp.expr->block_id.empty() ? site.stmt->block_id
                                                                      : site.cmp.expr->block_id});
            issue.params["value"] = format_number(site.cmp.literal);
            issue.params["lo"] = format_number(range.lo);
            issue.params["hi"] = format_number(range.hi);
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

// The actor both activates the actuator and switches it off somewhere.
std::vector<Issue> find_actuator_off(const Project& project, Actuator actuator) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor_ref) {
        bool activated = false;
        const Script* off_script = nullptr;
        std::string off_block;
        for (const Script& script : actor_ref.scripts) {
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (is_activation(stmt, actuator))
                    activated = true;
                if (!off_block.empty())
                    return;
                if (is_deactivation(stmt, actuator)) {
                    off_script = &script;
                    off_block = stmt.block_id;
                }
            });
        }
        if (!activated || off_block.empty())
            return;
        Issue issue = make_issue(pattern::actuator_off(actuator), Category::Perfume,
                                 actor_ref, off_script, {off_block});
        issue.metadata["actuator"] = std::string(actuator_slug(actuator));
        issues.push_back(std::move(issue));
    });
    return issues;
}

// Sensor reads that happen inside a loop keep reacting to the environment.
std::vector<Issue> find_loop_sensing(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                std::size_t queries = 0;
                auto count = [&](const Expr& e) {
                    if (std::holds_alternative<SensorQuery>(e.node))
                        ++queries;
                };
                if (!loops.empty()) {
                    for_each_expr(stmt, count);
                } else if (is_loop(stmt)) {
                    // a repeat-until condition polls continuously by itself
                    if (auto* c = as_control(stmt); c && c->condition)
                        for_each_expr_rec(*c->condition, count);
                }
                for (std::size_t i = 0; i < queries; ++i)
                    issues.push_back(make_issue(pattern::kLoopSensing, Category::Perfume,
                                                actor, &script, {stmt.block_id}));
            });
        }
    });
    return issues;
}

std::vector<Issue> find_motor_usage(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const auto& site : detail::collect_motor_literals(actor)) {
            if (site.cls != MotorLiteralClass::Usage)
                continue;
            Issue issue = make_issue(pattern::kMotorUsage, Category::Perfume, actor,
                                     site.script, {site.stmt->block_id});
            issue.params["value"] = format_number(site.power);
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

// Several scripts sharing a hat block split work into readable subtasks.
std::vector<Issue> find_parallelisation(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const auto& group : scripts_grouped_by_hat(actor)) {
            if (group.size() < 2)
                continue;
            std::vector<std::string> blocks;
            std::string script_ids;
            for (const Script* script : group) {
                blocks.push_back(script->hat.block_id);
                if (!script_ids.empty())
                    script_ids += ",";
                script_ids += std::to_string(script->index);
            }
            Issue issue = make_issue(pattern::kParallelisation, Category::Perfume, actor,
                                     group.front(), std::move(blocks));
            issue.params["count"] = std::to_string(group.size());
            issue.metadata["scripts"] = script_ids;
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

} // namespace botlint
