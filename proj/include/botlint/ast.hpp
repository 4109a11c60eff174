#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "botlint/ingest.hpp"
#include "botlint/registry.hpp"

namespace botlint {

struct Expr;
struct Stmt;

// ---- expressions -----------------------------------------------------------

struct NumberLit {
    double value = 0;
};

struct StringLit {
    std::string value;
};

// Colour literals are kept as numeric components; a hex literal becomes three
// components, a bare number in a colour slot becomes one.
struct ColourLit {
    std::vector<double> components;
};

struct SensorQuery {
    Sensor sensor{};
};

struct BooleanQuery {
    std::string kind; // "button", "ir-remote"
};

struct BinaryExpr {
    OperatorVariant op{};
    std::vector<Expr> operands; // two entries
};

struct NotExpr {
    std::vector<Expr> operand; // one entry
};

struct VarRef {
    std::string name;
};

struct UnknownExpr {
    std::string opcode;
    std::vector<Expr> children;
};

struct Expr {
    std::string block_id; // empty for literals that came from input wrappers
    std::variant<NumberLit, StringLit, ColourLit, SensorQuery, BooleanQuery,
                 BinaryExpr, NotExpr, VarRef, UnknownExpr>
        node;
};

// ---- statements -------------------------------------------------------------

struct ActuatorOnStmt {
    Actuator actuator{};
    std::vector<Expr> colour_args;
    std::optional<Expr> power;
    std::optional<Expr> content;
};

struct ActuatorOffStmt {
    Actuator actuator{};
};

struct TimedActuatorStmt {
    Actuator actuator{};
    Expr time;
    std::vector<Expr> colour_args;
    std::optional<Expr> power;
    std::optional<Expr> content;
};

struct MoveStmt {
    Direction direction{};
    std::optional<Expr> power;
};

struct TimedMoveStmt {
    Direction direction{};
    std::optional<Expr> power;
    std::optional<Expr> time;
};

struct ControlStmt {
    ControlVariant variant{};
    std::optional<Expr> condition;
    std::optional<Expr> time;  // Wait
    std::optional<Expr> times; // RepeatTimes
    std::vector<Stmt> body;
    std::vector<Stmt> else_body;
};

struct SetVariableStmt {
    std::string variable;
    std::optional<Expr> value;
};

struct ChangeVariableStmt {
    std::string variable;
    std::optional<Expr> delta;
};

struct UnknownStmt {
    std::string opcode;
    std::vector<Expr> inputs;
    std::vector<Stmt> body; // substack-shaped inputs stay traversable
};

struct Stmt {
    std::string block_id;
    std::variant<ActuatorOnStmt, ActuatorOffStmt, TimedActuatorStmt, MoveStmt,
                 TimedMoveStmt, ControlStmt, SetVariableStmt, ChangeVariableStmt,
                 UnknownStmt>
        node;
};

// ---- project structure ------------------------------------------------------

struct Hat {
    std::string block_id;
    std::string opcode;
    std::string event_tag;
    std::map<std::string, std::string> fields; // equality-relevant hat fields
};

struct Script {
    Hat hat;
    std::vector<Stmt> body;
    std::string actor_name;
    int index = 0; // position within the actor, document order
};

struct Actor {
    std::string name;
    bool is_stage = false;
    std::string device_tag;            // raw tag, "" when absent
    std::optional<Device> device;      // set only for codey/mcore
    std::vector<Script> scripts;
    std::vector<Stmt> loose_blocks;    // top-level fragments without a hat

    bool is_robot() const { return device.has_value(); }
};

struct Project {
    std::string source_path;
    std::vector<Actor> actors;
    std::vector<Warning> warnings;
};

// Builds the typed tree. Total: malformed substructures become Unknown nodes
// and produce warnings instead of failures.
Project build_ast(const RawProject& raw, const Registry& registry);

// Convenience: load + decode + build in one step.
Project load_and_build(const std::string& path, const Registry& registry);

} // namespace botlint
