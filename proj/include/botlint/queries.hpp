#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "botlint/ast.hpp"

namespace botlint {

// ---- statement queries -------------------------------------------------------

// Timed actuator statements: TimedActuator and TimedMove.
bool is_timed(const Stmt& stmt);

// Actuator touched by a statement; Move/TimedMove map to Motor.
std::optional<Actuator> actuator_of(const Stmt& stmt);

// Untimed activation (ActuatorOn, Move) / timed activation / any deactivation.
bool is_untimed_activation(const Stmt& stmt, Actuator actuator);
bool is_activation(const Stmt& stmt, Actuator actuator); // timed or untimed
bool is_deactivation(const Stmt& stmt, Actuator actuator);

// Statements that take real time: TimedActuator/TimedMove/Wait whose time
// literal is positive or not a literal at all.
bool is_delaying(const Stmt& stmt);

bool is_loop(const Stmt& stmt);
bool is_conditional(const Stmt& stmt); // If / IfElse / WaitUntil
const ControlStmt* as_control(const Stmt& stmt);

// Time literal of a timed statement (TimedActuator/TimedMove/Wait), if any.
std::optional<double> time_literal(const Stmt& stmt);

// Power literal (motor power) of Move/TimedMove/motor ActuatorOn/TimedActuator.
std::optional<double> power_literal(const Stmt& stmt);
bool has_power_slot(const Stmt& stmt);

// Colour components of a statement's colour slots. `all_literal` is false when
// any colour slot holds a non-literal expression.
struct ColourComponents {
    std::vector<double> values;
    bool all_literal = true;
};
std::optional<ColourComponents> colour_components(const Stmt& stmt);

// ---- expression queries -------------------------------------------------------

// All sensors referenced anywhere inside the expression (operators recursed).
std::vector<Sensor> sensor_refs(const Expr& expr);
bool references_boolean_sensor(const Expr& expr);

std::optional<double> literal_number(const Expr& expr);

// Direct comparison `sensor <op> literal` (either operand order); the operator
// is normalized so that the sensor reads as the left operand.
struct SensorComparison {
    Sensor sensor{};
    OperatorVariant op{};       // Eq, Gt or Lt, sensor-on-the-left view
    double literal = 0;
    const Expr* expr = nullptr; // the comparison node
};
std::vector<SensorComparison> sensor_comparisons(const Expr& expr);

// ---- script/actor queries ------------------------------------------------------

// Enclosing loop statements of `target`, outermost first.
std::vector<const Stmt*> enclosing_loops(const Script& script, const Stmt& target);

// Scripts grouped by identical (hat opcode, hat fields); singleton groups included.
std::vector<std::vector<const Script*>> scripts_grouped_by_hat(const Actor& actor);

// Recursive statement walk over one statement list (preorder, document order).
void for_each_stmt(const std::vector<Stmt>& stmts,
                   const std::function<void(const Stmt&)>& fn);
void for_each_stmt(const Script& script, const std::function<void(const Stmt&)>& fn);

// Root expressions of one statement (conditions, slots; not nested statements).
void for_each_root_expr(const Stmt& stmt, const std::function<void(const Expr&)>& fn);
// Every expression hanging off one statement, recursively.
void for_each_expr(const Stmt& stmt, const std::function<void(const Expr&)>& fn);
void for_each_expr_rec(const Expr& expr, const std::function<void(const Expr&)>& fn);

} // namespace botlint
