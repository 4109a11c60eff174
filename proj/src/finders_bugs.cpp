#include <algorithm>
#include <cmath>

#include "finders_common.hpp"

namespace botlint {

using detail::ComparisonClass;
using detail::ComparisonSite;
using detail::for_each_robot_actor;
using detail::format_number;
using detail::join_ids;
using detail::make_issue;

RangeVerdict comparison_verdict(Sensor sensor, OperatorVariant op, double literal,
                                Device device) {
    SensorRange range = sensor_range(sensor, device);
    switch (op) {
    case OperatorVariant::Gt:
        if (literal >= range.hi)
            return RangeVerdict::AlwaysFalse;
        if (literal < range.lo)
            return RangeVerdict::AlwaysTrue;
        return RangeVerdict::Satisfiable;
    case OperatorVariant::Lt:
        if (literal <= range.lo)
            return RangeVerdict::AlwaysFalse;
        if (literal > range.hi)
            return RangeVerdict::AlwaysTrue;
        return RangeVerdict::Satisfiable;
    case OperatorVariant::Eq:
        if (literal < range.lo || literal > range.hi)
            return RangeVerdict::AlwaysFalse;
        if (range.discrete && literal != std::floor(literal))
            return RangeVerdict::AlwaysFalse;
        return RangeVerdict::Satisfiable;
    default:
        return RangeVerdict::Satisfiable;
    }
}

MotorLiteralClass classify_motor_literal(double power, Device device) {
    if (power == 0)
        return MotorLiteralClass::Nothing;
    if (std::abs(power) > 100)
        return MotorLiteralClass::OutOfRange;
    MotorRange range = motor_range(device);
    if (device == Device::Mcore && std::abs(power) < range.min_effective)
        return MotorLiteralClass::LowPower;
    if (power < 0)
        return MotorLiteralClass::Negative;
    return MotorLiteralClass::Usage;
}

// Stop commands only silence the actuator; looping scripts re-activate it.
std::vector<Issue> find_action_not_stopped(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        // looped activations per actuator, across all scripts
        struct LoopedUse {
            const Script* script;
            std::string block_id;
        };
        std::map<int, std::vector<LoopedUse>> looped_uses; // keyed by actuator
        for (const Script& script : actor.scripts) {
            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                if (loops.empty())
                    return;
                auto actuator = actuator_of(stmt);
                if (!actuator || is_deactivation(stmt, *actuator))
                    return;
                looped_uses[static_cast<int>(*actuator)].push_back(
                    {&script, stmt.block_id});
            });
        }
        if (looped_uses.empty())
            return;

        for (const Script& script : actor.scripts) {
            bool scripts_stopped = false;
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (auto* c = as_control(stmt)) {
                    if (c->variant == ControlVariant::StopAll ||
                        c->variant == ControlVariant::StopOtherScripts)
                        scripts_stopped = true;
                }
                auto actuator = actuator_of(stmt);
                if (!actuator || !is_deactivation(stmt, *actuator) || scripts_stopped)
                    return;
                auto it = looped_uses.find(static_cast<int>(*actuator));
                if (it == looped_uses.end())
                    return;
                std::vector<std::string> use_ids;
                for (const LoopedUse& use : it->second)
                    if (use.script != &script)
                        use_ids.push_back(use.block_id);
                if (use_ids.empty())
                    return;
                std::vector<std::string> blocks{stmt.block_id};
                blocks.insert(blocks.end(), use_ids.begin(), use_ids.end());
                Issue issue = make_issue(pattern::kActionNotStopped, Category::Bug,
                                         actor, &script, std::move(blocks));
                issue.metadata["actuator"] = std::string(actuator_slug(*actuator));
                issue.metadata["looped_use_blocks"] = join_ids(use_ids);
                issues.push_back(std::move(issue));
            });
        }
    });
    return issues;
}

// Untimed activations with no deactivation anywhere in the actor.
std::vector<Issue> find_actuator_off_missing(const Project& project, Actuator actuator) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor_ref) {
        bool any_off = false;
        for (const Script& script : actor_ref.scripts)
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (is_deactivation(stmt, actuator))
                    any_off = true;
            });
        if (any_off)
            return;
        for (const Script& script : actor_ref.scripts) {
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (!is_untimed_activation(stmt, actuator))
                    return;
                Issue issue = make_issue(pattern::off_missing(actuator), Category::Bug,
                                         actor_ref, &script, {stmt.block_id});
                issue.metadata["actuator"] = std::string(actuator_slug(actuator));
                issues.push_back(std::move(issue));
            });
        }
    });
    return issues;
}

std::vector<Issue> find_colour_out_of_range(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            for_each_stmt(script, [&](const Stmt& stmt) {
                auto colours = colour_components(stmt);
                if (!colours)
                    return;
                for (std::size_t i = 0; i < colours->values.size(); ++i) {
                    double v = colours->values[i];
                    if (v >= 0 && v <= 255)
                        continue;
                    Issue issue = make_issue(pattern::kColourOutOfRange, Category::Bug,
                                             actor, &script, {stmt.block_id});
                    issue.params["value"] = format_number(v);
                    issue.metadata["component"] = std::to_string(i);
                    issues.push_back(std::move(issue));
                }
            });
        }
    });
    return issues;
}

// Sensor polling loops that also sleep miss short-lived readings.
std::vector<Issue> find_interrupted_loop_sensing(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            // for every loop: sensor queries in its condition or body, and
            // whether the body contains a delaying statement
            struct LoopInfo {
                const Stmt* loop;
                std::vector<std::string> query_blocks; // one entry per query
                bool has_delay = false;
            };
            std::vector<LoopInfo> loop_infos;
            std::map<const Stmt*, std::size_t> index;

            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                if (is_loop(stmt)) {
                    index.emplace(&stmt, loop_infos.size());
                    LoopInfo info;
                    info.loop = &stmt;
                    // queries in the loop head condition
                    if (auto* c = as_control(stmt); c && c->condition) {
                        std::size_t n = sensor_refs(*c->condition).size();
                        for (std::size_t i = 0; i < n; ++i)
                            info.query_blocks.push_back(stmt.block_id);
                    }
                    loop_infos.push_back(std::move(info));
                }
                for (const Stmt* loop : loops) {
                    LoopInfo& info = loop_infos[index.at(loop)];
                    if (is_delaying(stmt))
                        info.has_delay = true;
                    // queries inside the loop body (conditions of nested
                    // statements included)
                    std::size_t n = 0;
                    for_each_expr(stmt, [&](const Expr& e) {
                        if (std::holds_alternative<SensorQuery>(e.node))
                            ++n;
                    });
                    for (std::size_t i = 0; i < n; ++i)
                        info.query_blocks.push_back(stmt.block_id);
                }
            });

            for (const LoopInfo& info : loop_infos) {
                if (!info.has_delay)
                    continue;
                for (const std::string& query_block : info.query_blocks) {
                    Issue issue = make_issue(pattern::kInterruptedLoopSensing,
                                             Category::Bug, actor, &script,
                                             {info.loop->block_id, query_block});
                    issues.push_back(std::move(issue));
                }
            }
        }
    });
    return issues;
}

std::vector<Issue> find_low_motor_power(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const auto& site : detail::collect_motor_literals(actor)) {
            if (site.cls != MotorLiteralClass::LowPower)
                continue;
            Issue issue = make_issue(pattern::kLowMotorPower, Category::Bug, actor,
                                     site.script, {site.stmt->block_id});
            issue.params["value"] = format_number(site.power);
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

// A sensor conditional outside every loop runs exactly once.
std::vector<Issue> find_missing_loop_sensing(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                if (!loops.empty() || !is_conditional(stmt))
                    return;
                auto* c = as_control(stmt);
                if (!c->condition || sensor_refs(*c->condition).empty())
                    return;
                issues.push_back(make_issue(pattern::kMissingLoopSensing, Category::Bug,
                                            actor, &script, {stmt.block_id}));
            });
        }
    });
    return issues;
}

std::vector<Issue> find_motor_out_of_range(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const auto& site : detail::collect_motor_literals(actor)) {
            if (site.cls != MotorLiteralClass::OutOfRange)
                continue;
            Issue issue = make_issue(pattern::kMotorOutOfRange, Category::Bug, actor,
                                     site.script, {site.stmt->block_id});
            issue.params["value"] = format_number(site.power);
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

// Scripts with the same hat share the timeline; touching the same actuator
// from both leads to conflicts.
std::vector<Issue> find_parallel_actuator_use(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        auto actuator_uses = [](const Script& script) {
            std::array<std::vector<std::string>, 4> uses;
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (auto a = actuator_of(stmt))
                    uses[static_cast<std::size_t>(*a)].push_back(stmt.block_id);
            });
            return uses;
        };
        for (const auto& group : scripts_grouped_by_hat(actor)) {
            if (group.size() < 2)
                continue;
            std::vector<std::array<std::vector<std::string>, 4>> uses;
            uses.reserve(group.size());
            for (const Script* script : group)
                uses.push_back(actuator_uses(*script));
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    for (Actuator a : kAllActuators) {
                        auto idx = static_cast<std::size_t>(a);
                        if (uses[i][idx].empty() || uses[j][idx].empty())
                            continue;
                        std::vector<std::string> blocks;
                        blocks.push_back(uses[i][idx].front());
                        blocks.push_back(uses[j][idx].front());
                        Issue issue = make_issue(pattern::kParallelActuatorUse,
                                                 Category::Bug, actor, group[i],
                                                 std::move(blocks));
                        issue.metadata["actuator"] = std::string(actuator_slug(a));
                        issue.metadata["scripts"] = std::to_string(group[i]->index) + "," +
                                                    std::to_string(group[j]->index);
                        issues.push_back(std::move(issue));
                    }
                }
            }
        }
    });
    return issues;
}

// Fast polling of a button/sensor that mutates state fires hundreds of times
// per second.
std::vector<Issue> find_query_in_loop(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            // pre-compute which loops are fast (no delaying statement inside)
            std::map<const Stmt*, bool> loop_has_delay;
            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                if (is_loop(stmt))
                    loop_has_delay.emplace(&stmt, false);
                if (is_delaying(stmt))
                    for (const Stmt* loop : loops)
                        loop_has_delay[loop] = true;
            });
            auto in_fast_loop = [&](const detail::LoopStack& loops) {
                return std::any_of(loops.begin(), loops.end(), [&](const Stmt* loop) {
                    return !loop_has_delay.at(loop);
                });
            };

            auto queries_state = [](const Expr& condition) {
                return !sensor_refs(condition).empty() ||
                       references_boolean_sensor(condition);
            };
            auto mutates_variables = [](const std::vector<Stmt>& stmts) {
                bool found = false;
                for_each_stmt(stmts, [&](const Stmt& s) {
                    if (std::holds_alternative<SetVariableStmt>(s.node) ||
                        std::holds_alternative<ChangeVariableStmt>(s.node))
                        found = true;
                });
                return found;
            };

            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                auto* c = as_control(stmt);
                if (!c || !c->condition || !queries_state(*c->condition))
                    return;
                bool fires = false;
                if ((c->variant == ControlVariant::If ||
                     c->variant == ControlVariant::IfElse) &&
                    in_fast_loop(loops)) {
                    fires = mutates_variables(c->body) || mutates_variables(c->else_body);
                } else if (c->variant == ControlVariant::RepeatUntil &&
                           !loop_has_delay.at(&stmt)) {
                    // the loop itself polls the sensor in its condition
                    fires = mutates_variables(c->body);
                }
                if (fires)
                    issues.push_back(make_issue(pattern::kQueryInLoop, Category::Bug,
                                                actor, &script, {stmt.block_id}));
            });
        }
    });
    return issues;
}

// Unrounded sensor values practically never hit an exact number.
std::vector<Issue> find_sensor_equals_check(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const ComparisonSite& site : detail::collect_comparisons(actor)) {
            if (site.cls != ComparisonClass::EqualsCheck)
                continue;
            Issue issue = make_issue(pattern::kSensorEqualsCheck, Category::Bug, actor,
                                     site.script,
                                     {site.cmp.expr->block_id.empty() ? site.stmt->block_id
                                                                      : site.cmp.expr->block_id});
            issue.params["value"] = format_number(site.cmp.literal);
            issue.metadata["sensor"] = std::string(sensor_slug(site.cmp.sensor));
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

// In upload mode the board runs scripts sequentially; several launch scripts
// do not run in parallel.
std::vector<Issue> find_several_launches(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        if (actor.device != Device::Mcore)
            return;
        std::vector<std::string> launch_blocks;
        const Script* first = nullptr;
        for (const Script& script : actor.scripts) {
            if (script.hat.event_tag != "board_launch")
                continue;
            if (!first)
                first = &script;
            launch_blocks.push_back(script.hat.block_id);
        }
        if (launch_blocks.size() < 2)
            return;
        Issue issue = make_issue(pattern::kSeveralLaunches, Category::Bug, actor, first,
                                 launch_blocks);
        issue.params["count"] = std::to_string(launch_blocks.size());
        issue.metadata["count"] = std::to_string(launch_blocks.size());
        issues.push_back(std::move(issue));
    });
    return issues;
}

// Timed movement blocks in loops pause visibly between iterations in live mode.
std::vector<Issue> find_stuttering_action(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            detail::walk_with_loops(script, [&](const Stmt& stmt,
                                                const detail::LoopStack& loops) {
                if (loops.empty())
                    return;
                bool timed_movement = std::holds_alternative<TimedMoveStmt>(stmt.node);
                if (auto* s = std::get_if<TimedActuatorStmt>(&stmt.node))
                    timed_movement = s->actuator == Actuator::Motor;
                if (!timed_movement)
                    return;
                issues.push_back(make_issue(pattern::kStutteringAction, Category::Bug,
                                            actor, &script, {stmt.block_id}));
            });
        }
    });
    return issues;
}

std::vector<Issue> find_useless_sensing(const Project& project, Sensor sensor) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const ComparisonSite& site : detail::collect_comparisons(actor)) {
            if (site.cls != ComparisonClass::Useless || site.cmp.sensor != sensor)
                continue;
            SensorRange range = sensor_range(sensor, *actor.device);
            Issue issue = make_issue(pattern::useless_sensing(sensor), Category::Bug,
                                     actor, site.script,
                                     {site.cmp.expr->block_id.empty() ? site.stmt->block_id
                                                                      : site.cmp.expr->block_id});
            issue.params["value"] = format_number(site.cmp.literal);
            issue.params["lo"] = format_number(range.lo);
            issue.params["hi"] = format_number(range.hi);
            issue.metadata["verdict"] = site.verdict == RangeVerdict::AlwaysTrue
                                            ? "alwaysTrue"
                                            : "alwaysFalse";
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

// Cancelling all scripts on a Codey Rocky during the waiting phase of a timed
// block skips the deactivation step.
std::vector<Issue> find_waiting_aborted(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        if (actor.device != Device::Codey)
            return;
        struct StopSite {
            const Script* script;
            std::string block_id;
        };
        std::vector<StopSite> stops;
        std::vector<std::pair<const Script*, std::string>> timed_blocks;
        for (const Script& script : actor.scripts) {
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (auto* c = as_control(stmt);
                    c && c->variant == ControlVariant::StopAll)
                    stops.push_back({&script, stmt.block_id});
                if (is_timed(stmt))
                    timed_blocks.emplace_back(&script, stmt.block_id);
            });
        }
        for (const StopSite& stop : stops) {
            std::vector<std::string> at_risk;
            for (const auto& [script, block_id] : timed_blocks)
                if (script != stop.script)
                    at_risk.push_back(block_id);
            if (at_risk.empty())
                continue;
            Issue issue = make_issue(pattern::kWaitingAborted, Category::Bug, actor,
                                     stop.script, {stop.block_id});
            issue.metadata["timed_blocks"] = join_ids(at_risk);
            issues.push_back(std::move(issue));
            break; // one issue per actor
        }
    });
    return issues;
}

} // namespace botlint
