#include "botlint/queries.hpp"

#include <cstdlib>

namespace botlint {

namespace {

template <typename T>
const T* get_node(const Stmt& stmt) {
    return std::get_if<T>(&stmt.node);
}

} // namespace

bool is_timed(const Stmt& stmt) {
    return std::holds_alternative<TimedActuatorStmt>(stmt.node) ||
           std::holds_alternative<TimedMoveStmt>(stmt.node);
}

std::optional<Actuator> actuator_of(const Stmt& stmt) {
    if (auto* s = get_node<ActuatorOnStmt>(stmt))
        return s->actuator;
    if (auto* s = get_node<ActuatorOffStmt>(stmt))
        return s->actuator;
    if (auto* s = get_node<TimedActuatorStmt>(stmt))
        return s->actuator;
    if (get_node<MoveStmt>(stmt) || get_node<TimedMoveStmt>(stmt))
        return Actuator::Motor;
    return std::nullopt;
}

bool is_untimed_activation(const Stmt& stmt, Actuator actuator) {
    if (auto* s = get_node<ActuatorOnStmt>(stmt))
        return s->actuator == actuator;
    if (get_node<MoveStmt>(stmt))
        return actuator == Actuator::Motor;
    return false;
}

bool is_activation(const Stmt& stmt, Actuator actuator) {
    if (is_untimed_activation(stmt, actuator))
        return true;
    if (auto* s = get_node<TimedActuatorStmt>(stmt))
        return s->actuator == actuator;
    if (get_node<TimedMoveStmt>(stmt))
        return actuator == Actuator::Motor;
    return false;
}

bool is_deactivation(const Stmt& stmt, Actuator actuator) {
    if (auto* s = get_node<ActuatorOffStmt>(stmt))
        return s->actuator == actuator;
    return false;
}

std::optional<double> time_literal(const Stmt& stmt) {
    const std::optional<Expr>* time = nullptr;
    std::optional<Expr> wrapped;
    if (auto* s = get_node<TimedActuatorStmt>(stmt)) {
        wrapped = s->time;
        time = &wrapped;
    } else if (auto* s = get_node<TimedMoveStmt>(stmt)) {
        time = &s->time;
    } else if (auto* s = get_node<ControlStmt>(stmt)) {
        if (s->variant == ControlVariant::Wait)
            time = &s->time;
    }
    if (!time || !time->has_value())
        return std::nullopt;
    return literal_number(**time);
}

bool is_delaying(const Stmt& stmt) {
    bool candidate = is_timed(stmt);
    if (auto* s = get_node<ControlStmt>(stmt))
        candidate = candidate || s->variant == ControlVariant::Wait;
    if (!candidate)
        return false;
    auto t = time_literal(stmt);
    return !t.has_value() || *t > 0;
}

const ControlStmt* as_control(const Stmt& stmt) {
    return get_node<ControlStmt>(stmt);
}

bool is_loop(const Stmt& stmt) {
    auto* s = as_control(stmt);
    return s && (s->variant == ControlVariant::Forever ||
                 s->variant == ControlVariant::RepeatTimes ||
                 s->variant == ControlVariant::RepeatUntil);
}

bool is_conditional(const Stmt& stmt) {
    auto* s = as_control(stmt);
    return s && (s->variant == ControlVariant::If ||
                 s->variant == ControlVariant::IfElse ||
                 s->variant == ControlVariant::WaitUntil);
}

std::optional<double> power_literal(const Stmt& stmt) {
    const std::optional<Expr>* power = nullptr;
    if (auto* s = get_node<MoveStmt>(stmt))
        power = &s->power;
    else if (auto* s = get_node<TimedMoveStmt>(stmt))
        power = &s->power;
    else if (auto* s = get_node<ActuatorOnStmt>(stmt)) {
        if (s->actuator == Actuator::Motor)
            power = &s->power;
    } else if (auto* s = get_node<TimedActuatorStmt>(stmt)) {
        if (s->actuator == Actuator::Motor)
            power = &s->power;
    }
    if (!power || !power->has_value())
        return std::nullopt;
    return literal_number(**power);
}

bool has_power_slot(const Stmt& stmt) {
    if (get_node<MoveStmt>(stmt) || get_node<TimedMoveStmt>(stmt))
        return true;
    if (auto* s = get_node<ActuatorOnStmt>(stmt))
        return s->actuator == Actuator::Motor;
    if (auto* s = get_node<TimedActuatorStmt>(stmt))
        return s->actuator == Actuator::Motor;
    return false;
}

std::optional<ColourComponents> colour_components(const Stmt& stmt) {
    const std::vector<Expr>* args = nullptr;
    if (auto* s = get_node<ActuatorOnStmt>(stmt))
        args = &s->colour_args;
    else if (auto* s = get_node<TimedActuatorStmt>(stmt))
        args = &s->colour_args;
    if (!args || args->empty())
        return std::nullopt;

    ColourComponents out;
    for (const Expr& e : *args) {
        if (auto* lit = std::get_if<ColourLit>(&e.node)) {
            out.values.insert(out.values.end(), lit->components.begin(),
                              lit->components.end());
        } else if (auto n = literal_number(e)) {
            out.values.push_back(*n);
        } else {
            out.all_literal = false;
        }
    }
    return out;
}

std::vector<Sensor> sensor_refs(const Expr& expr) {
    std::vector<Sensor> out;
    for_each_expr_rec(expr, [&](const Expr& e) {
        if (auto* s = std::get_if<SensorQuery>(&e.node))
            out.push_back(s->sensor);
    });
    return out;
}

bool references_boolean_sensor(const Expr& expr) {
    bool found = false;
    for_each_expr_rec(expr, [&](const Expr& e) {
        if (std::holds_alternative<BooleanQuery>(e.node))
            found = true;
    });
    return found;
}

std::optional<double> literal_number(const Expr& expr) {
    if (auto* n = std::get_if<NumberLit>(&expr.node))
        return n->value;
    if (auto* s = std::get_if<StringLit>(&expr.node)) {
        // block-based literals are stored as text; numeric text counts
        if (s->value.empty())
            return std::nullopt;
        const char* begin = s->value.c_str();
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            return std::nullopt;
        return v;
    }
    return std::nullopt;
}

std::vector<SensorComparison> sensor_comparisons(const Expr& expr) {
    std::vector<SensorComparison> out;
    for_each_expr_rec(expr, [&](const Expr& e) {
        auto* bin = std::get_if<BinaryExpr>(&e.node);
        if (!bin || bin->operands.size() != 2)
            return;
        if (bin->op != OperatorVariant::Eq && bin->op != OperatorVariant::Gt &&
            bin->op != OperatorVariant::Lt)
            return;
        const Expr& lhs = bin->operands[0];
        const Expr& rhs = bin->operands[1];
        auto* lsensor = std::get_if<SensorQuery>(&lhs.node);
        auto* rsensor = std::get_if<SensorQuery>(&rhs.node);
        if (lsensor && !rsensor) {
            if (auto lit = literal_number(rhs))
                out.push_back({lsensor->sensor, bin->op, *lit, &e});
        } else if (rsensor && !lsensor) {
            if (auto lit = literal_number(lhs)) {
                // literal <op> sensor: flip so the sensor is on the left
                OperatorVariant op = bin->op;
                if (op == OperatorVariant::Gt)
                    op = OperatorVariant::Lt;
                else if (op == OperatorVariant::Lt)
                    op = OperatorVariant::Gt;
                out.push_back({rsensor->sensor, op, *lit, &e});
            }
        }
    });
    return out;
}

std::vector<const Stmt*> enclosing_loops(const Script& script, const Stmt& target) {
    std::vector<const Stmt*> stack;
    std::vector<const Stmt*> found;
    bool done = false;

    std::function<void(const std::vector<Stmt>&)> walk = [&](const std::vector<Stmt>& stmts) {
        for (const Stmt& s : stmts) {
            if (done)
                return;
            if (&s == &target) {
                found = stack;
                done = true;
                return;
            }
            const std::vector<Stmt>* body = nullptr;
            const std::vector<Stmt>* else_body = nullptr;
            if (auto* c = as_control(s)) {
                body = &c->body;
                else_body = &c->else_body;
            } else if (auto* u = std::get_if<UnknownStmt>(&s.node)) {
                body = &u->body;
            }
            if (body) {
                bool loop = is_loop(s);
                if (loop)
                    stack.push_back(&s);
                walk(*body);
                if (else_body && !done)
                    walk(*else_body);
                if (loop)
                    stack.pop_back();
            }
        }
    };
    walk(script.body);
    return found;
}

std::vector<std::vector<const Script*>> scripts_grouped_by_hat(const Actor& actor) {
    std::vector<std::vector<const Script*>> groups;
    auto same_hat = [](const Hat& a, const Hat& b) {
        return a.opcode == b.opcode && a.fields == b.fields;
    };
    for (const Script& script : actor.scripts) {
        bool placed = false;
        for (auto& group : groups) {
            if (same_hat(group.front()->hat, script.hat)) {
                group.push_back(&script);
                placed = true;
                break;
            }
        }
        if (!placed)
            groups.push_back({&script});
    }
    return groups;
}

void for_each_stmt(const std::vector<Stmt>& stmts,
                   const std::function<void(const Stmt&)>& fn) {
    for (const Stmt& s : stmts) {
        fn(s);
        if (auto* c = as_control(s)) {
            for_each_stmt(c->body, fn);
            for_each_stmt(c->else_body, fn);
        } else if (auto* u = std::get_if<UnknownStmt>(&s.node)) {
            for_each_stmt(u->body, fn);
        }
    }
}

void for_each_stmt(const Script& script, const std::function<void(const Stmt&)>& fn) {
    for_each_stmt(script.body, fn);
}

void for_each_root_expr(const Stmt& stmt, const std::function<void(const Expr&)>& fn) {
    auto visit_opt = [&](const std::optional<Expr>& e) {
        if (e)
            fn(*e);
    };
    auto visit_vec = [&](const std::vector<Expr>& es) {
        for (const Expr& e : es)
            fn(e);
    };
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ActuatorOnStmt>) {
                visit_vec(node.colour_args);
                visit_opt(node.power);
                visit_opt(node.content);
            } else if constexpr (std::is_same_v<T, TimedActuatorStmt>) {
                for_each_expr_rec(node.time, fn);
                visit_vec(node.colour_args);
                visit_opt(node.power);
                visit_opt(node.content);
            } else if constexpr (std::is_same_v<T, MoveStmt>) {
                visit_opt(node.power);
            } else if constexpr (std::is_same_v<T, TimedMoveStmt>) {
                visit_opt(node.power);
                visit_opt(node.time);
            } else if constexpr (std::is_same_v<T, ControlStmt>) {
                visit_opt(node.condition);
                visit_opt(node.time);
                visit_opt(node.times);
            } else if constexpr (std::is_same_v<T, SetVariableStmt>) {
                visit_opt(node.value);
            } else if constexpr (std::is_same_v<T, ChangeVariableStmt>) {
                visit_opt(node.delta);
            } else if constexpr (std::is_same_v<T, UnknownStmt>) {
                visit_vec(node.inputs);
            }
        },
        stmt.node);
}

void for_each_expr(const Stmt& stmt, const std::function<void(const Expr&)>& fn) {
    for_each_root_expr(stmt, [&](const Expr& e) { for_each_expr_rec(e, fn); });
}

void for_each_expr_rec(const Expr& expr, const std::function<void(const Expr&)>& fn) {
    fn(expr);
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, BinaryExpr>) {
                for (const Expr& e : node.operands)
                    for_each_expr_rec(e, fn);
            } else if constexpr (std::is_same_v<T, NotExpr>) {
                for (const Expr& e : node.operand)
                    for_each_expr_rec(e, fn);
            } else if constexpr (std::is_same_v<T, UnknownExpr>) {
                for (const Expr& e : node.children)
                    for_each_expr_rec(e, fn);
            }
        },
        expr.node);
}

} // namespace botlint
