#include "botlint/visit.hpp"

namespace botlint {

namespace {

bool is_loop_variant(ControlVariant v) {
    return v == ControlVariant::Forever || v == ControlVariant::RepeatTimes ||
           v == ControlVariant::RepeatUntil;
}

class Walker {
public:
    Walker(const Actor& actor, AstVisitor& visitor) : visitor_(visitor) {
        ctx_.actor = &actor;
    }

    void walk(const Actor& actor) {
        visitor_.visit_actor(actor);
        for (const Script& script : actor.scripts) {
            ctx_.script = &script;
            visitor_.visit_script(script, ctx_);
            visitor_.visit_hat(script.hat, ctx_);
            walk_stmts(script.body);
        }
        ctx_.script = nullptr;
        walk_stmts(actor.loose_blocks);
    }

private:
    void walk_stmts(const std::vector<Stmt>& stmts) {
        for (const Stmt& stmt : stmts)
            walk_stmt(stmt);
    }

    void walk_stmt(const Stmt& stmt) {
        visitor_.visit_stmt(stmt, ctx_);
        std::visit([&](const auto& node) { walk_children(stmt, node); }, stmt.node);
    }

    void walk_children(const Stmt&, const ActuatorOnStmt& s) {
        walk_exprs(s.colour_args);
        walk_opt(s.power);
        walk_opt(s.content);
    }
    void walk_children(const Stmt&, const ActuatorOffStmt&) {}
    void walk_children(const Stmt&, const TimedActuatorStmt& s) {
        walk_expr(s.time);
        walk_exprs(s.colour_args);
        walk_opt(s.power);
        walk_opt(s.content);
    }
    void walk_children(const Stmt&, const MoveStmt& s) { walk_opt(s.power); }
    void walk_children(const Stmt&, const TimedMoveStmt& s) {
        walk_opt(s.power);
        walk_opt(s.time);
    }
    void walk_children(const Stmt& stmt, const ControlStmt& s) {
        walk_opt(s.condition);
        walk_opt(s.time);
        walk_opt(s.times);
        ctx_.stmt_ancestors.push_back(&stmt);
        bool loop = is_loop_variant(s.variant);
        if (loop)
            ctx_.loop_ancestors.push_back(&stmt);
        walk_stmts(s.body);
        walk_stmts(s.else_body);
        if (loop)
            ctx_.loop_ancestors.pop_back();
        ctx_.stmt_ancestors.pop_back();
    }
    void walk_children(const Stmt&, const SetVariableStmt& s) { walk_opt(s.value); }
    void walk_children(const Stmt&, const ChangeVariableStmt& s) { walk_opt(s.delta); }
    void walk_children(const Stmt& stmt, const UnknownStmt& s) {
        walk_exprs(s.inputs);
        ctx_.stmt_ancestors.push_back(&stmt);
        walk_stmts(s.body);
        ctx_.stmt_ancestors.pop_back();
    }

    void walk_opt(const std::optional<Expr>& e) {
        if (e)
            walk_expr(*e);
    }

    void walk_exprs(const std::vector<Expr>& exprs) {
        for (const Expr& e : exprs)
            walk_expr(e);
    }

    void walk_expr(const Expr& expr) {
        visitor_.visit_expr(expr, ctx_);
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, BinaryExpr>)
                    walk_exprs(node.operands);
                else if constexpr (std::is_same_v<T, NotExpr>)
                    walk_exprs(node.operand);
                else if constexpr (std::is_same_v<T, UnknownExpr>)
                    walk_exprs(node.children);
            },
            expr.node);
    }

    AstVisitor& visitor_;
    VisitContext ctx_;
};

} // namespace

void traverse_actor(const Actor& actor, AstVisitor& visitor) {
    Walker walker(actor, visitor);
    walker.walk(actor);
}

void traverse(const Project& project, AstVisitor& visitor) {
    for (const Actor& actor : project.actors)
        traverse_actor(actor, visitor);
}

} // namespace botlint
