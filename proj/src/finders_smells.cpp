#include "finders_common.hpp"

namespace botlint {

using detail::for_each_robot_actor;
using detail::format_number;
using detail::make_issue;

std::vector<Issue> find_negative_motor_power(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const auto& site : detail::collect_motor_literals(actor)) {
            if (site.cls != MotorLiteralClass::Negative)
                continue;
            Issue issue = make_issue(pattern::kNegativeMotorPower, Category::Smell,
                                     actor, site.script, {site.stmt->block_id});
            issue.params["value"] = format_number(site.power);
            issues.push_back(std::move(issue));
        }
    });
    return issues;
}

namespace {

// Attribute a statement writes without an inherent wait: LED colour, matrix
// content, light colour/state, motor power. Deactivations end use and do not
// count as settings.
std::optional<Actuator> setting_attribute(const Stmt& stmt) {
    if (auto* s = std::get_if<ActuatorOnStmt>(&stmt.node))
        return s->actuator;
    if (std::get_if<MoveStmt>(&stmt.node))
        return Actuator::Motor;
    return std::nullopt;
}

// Waits, timed statements and nested control flow separate two settings.
bool is_setting_barrier(const Stmt& stmt) {
    if (is_delaying(stmt))
        return true;
    if (auto* c = as_control(stmt)) {
        switch (c->variant) {
        case ControlVariant::WaitUntil:
        case ControlVariant::If:
        case ControlVariant::IfElse:
        case ControlVariant::Forever:
        case ControlVariant::RepeatTimes:
        case ControlVariant::RepeatUntil:
            return true;
        default:
            return false;
        }
    }
    return is_timed(stmt);
}

} // namespace

// Back-to-back settings of the same attribute: only the last one is visible.
std::vector<Issue> find_noneffective_modification(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            // check each straight-line statement sequence independently
            std::function<void(const std::vector<Stmt>&)> scan =
                [&](const std::vector<Stmt>& stmts) {
                    const Stmt* last_setting[4] = {nullptr, nullptr, nullptr, nullptr};
                    for (const Stmt& stmt : stmts) {
                        if (is_setting_barrier(stmt)) {
                            for (auto& s : last_setting)
                                s = nullptr;
                        }
                        if (auto attr = setting_attribute(stmt)) {
                            auto idx = static_cast<std::size_t>(*attr);
                            if (last_setting[idx]) {
                                Issue issue = make_issue(
                                    pattern::kNoneffectiveModification, Category::Smell,
                                    actor, &script,
                                    {last_setting[idx]->block_id, stmt.block_id});
                                issue.metadata["actuator"] =
                                    std::string(actuator_slug(*attr));
                                issues.push_back(std::move(issue));
                            }
                            last_setting[idx] = &stmt;
                        }
                        if (auto* c = as_control(stmt)) {
                            scan(c->body);
                            scan(c->else_body);
                        } else if (auto* u = std::get_if<UnknownStmt>(&stmt.node)) {
                            scan(u->body);
                        }
                    }
                };
            scan(script.body);
        }
    });
    return issues;
}

// A time limit of zero (or below) makes the block a no-op.
std::vector<Issue> find_noneffective_time_limit(const Project& project) {
    std::vector<Issue> issues;
    for_each_robot_actor(project, [&](const Actor& actor) {
        for (const Script& script : actor.scripts) {
            for_each_stmt(script, [&](const Stmt& stmt) {
                if (!is_timed(stmt))
                    return;
                auto t = time_literal(stmt);
                if (!t || *t > 0)
                    return;
                Issue issue = make_issue(pattern::kNoneffectiveTimeLimit, Category::Smell,
                                         actor, &script, {stmt.block_id});
                issue.params["value"] = format_number(*t);
                issues.push_back(std::move(issue));
            });
        }
    });
    return issues;
}

} // namespace botlint
