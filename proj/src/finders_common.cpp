#include "finders_common.hpp"

namespace botlint::detail {

namespace {

void walk_stmts(const std::vector<Stmt>& stmts, LoopStack& loops,
                const std::function<void(const Stmt&, const LoopStack&)>& fn) {
    for (const Stmt& stmt : stmts) {
        fn(stmt, loops);
        const std::vector<Stmt>* body = nullptr;
        const std::vector<Stmt>* else_body = nullptr;
        if (auto* c = as_control(stmt)) {
            body = &c->body;
            else_body = &c->else_body;
        } else if (auto* u = std::get_if<UnknownStmt>(&stmt.node)) {
            body = &u->body;
        }
        if (!body)
            continue;
        bool loop = is_loop(stmt);
        if (loop)
            loops.push_back(&stmt);
        walk_stmts(*body, loops, fn);
        if (else_body)
            walk_stmts(*else_body, loops, fn);
        if (loop)
            loops.pop_back();
    }
}

} // namespace

void walk_with_loops(const Script& script,
                     const std::function<void(const Stmt&, const LoopStack&)>& fn) {
    LoopStack loops;
    walk_stmts(script.body, loops, fn);
}

std::vector<ComparisonSite> collect_comparisons(const Actor& actor) {
    std::vector<ComparisonSite> out;
    if (!actor.device)
        return out;
    Device device = *actor.device;

    for (const Script& script : actor.scripts) {
        for_each_stmt(script, [&](const Stmt& stmt) {
            for_each_root_expr(stmt, [&](const Expr& root) {
                for (const SensorComparison& cmp : sensor_comparisons(root)) {
                    ComparisonSite site;
                    site.script = &script;
                    site.stmt = &stmt;
                    site.cmp = cmp;
                    site.verdict = comparison_verdict(cmp.sensor, cmp.op, cmp.literal, device);
                    bool discrete = sensor_range(cmp.sensor, device).discrete;
                    if (site.verdict != RangeVerdict::Satisfiable)
                        site.cls = ComparisonClass::Useless;
                    else if (cmp.op == OperatorVariant::Eq && !discrete)
                        site.cls = ComparisonClass::EqualsCheck;
                    else
                        site.cls = ComparisonClass::Correct;
                    out.push_back(site);
                }
            });
        });
    }
    return out;
}

std::vector<MotorLiteralSite> collect_motor_literals(const Actor& actor) {
    std::vector<MotorLiteralSite> out;
    if (!actor.device)
        return out;
    Device device = *actor.device;

    for (const Script& script : actor.scripts) {
        for_each_stmt(script, [&](const Stmt& stmt) {
            if (!has_power_slot(stmt))
                return;
            auto power = power_literal(stmt);
            if (!power)
                return;
            MotorLiteralSite site;
            site.script = &script;
            site.stmt = &stmt;
            site.power = *power;
            site.cls = classify_motor_literal(*power, device);
            out.push_back(site);
        });
    }
    return out;
}

} // namespace botlint::detail
