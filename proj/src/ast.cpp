#include "botlint/ast.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace botlint {

namespace {

std::optional<double> parse_number(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin)
        return std::nullopt;
    while (*end == ' ' || *end == '\t')
        ++end;
    if (*end != '\0')
        return std::nullopt;
    return v;
}

std::optional<ColourLit> parse_hex_colour(const std::string& text) {
    if (text.size() != 7 || text[0] != '#')
        return std::nullopt;
    auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    ColourLit lit;
    for (int i = 0; i < 3; ++i) {
        int hi = hex(text[1 + 2 * i]);
        int lo = hex(text[2 + 2 * i]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        lit.components.push_back(hi * 16 + lo);
    }
    return lit;
}

class AstBuilder {
public:
    AstBuilder(const RawTarget& target, const Registry& registry,
               std::vector<Warning>& warnings)
        : target_(target), registry_(registry), warnings_(warnings) {}

    Actor build() {
        Actor actor;
        actor.name = target_.name;
        actor.is_stage = target_.is_stage;
        actor.device_tag = target_.device;
        actor.device = parse_device_tag(target_.device);

        for (const auto& [id, block] : target_.blocks) {
            if (block.shadow || !is_chain_head(id, block))
                continue;
            build_chain(id);
        }
        actor.scripts = std::move(scripts_);
        actor.loose_blocks = std::move(loose_);
        return actor;
    }

private:
    const RawBlock* find(const std::string& id) const { return target_.find(id); }

    void warn(const std::string& block_id, std::string message) {
        warnings_.push_back(Warning{target_.name, block_id, std::move(message)});
    }

    // A chain head is a top-level block or an orphan nothing else points at.
    bool is_chain_head(const std::string& id, const RawBlock& block) {
        if (block.top_level)
            return true;
        if (block.parent)
            return false;
        if (referenced_.empty())
            collect_references();
        return !referenced_.count(id);
    }

    void collect_references() {
        referenced_.insert(""); // sentinel so the set is never empty
        for (const auto& [id, block] : target_.blocks) {
            if (block.next)
                referenced_.insert(*block.next);
            for (const auto& [slot, input] : block.inputs)
                if (input.tag == RawInput::Tag::BlockRef)
                    referenced_.insert(input.ref);
        }
    }

    void build_chain(const std::string& head_id) {
        const RawBlock* head = find(head_id);
        if (!head)
            return;
        const RegistryEntry* entry = registry_.lookup(head->opcode, target_.device);
        if (entry && entry->kind.tag == BlockKind::Tag::Hat) {
            Script script;
            script.hat.block_id = head_id;
            script.hat.opcode = head->opcode;
            script.hat.event_tag = entry->kind.event_tag;
            for (const std::string& field : entry->hat_fields) {
                auto it = head->fields.find(field);
                if (it != head->fields.end())
                    script.hat.fields.emplace(field, it->second);
            }
            script.actor_name = target_.name;
            script.index = static_cast<int>(scripts_.size());
            if (head->next)
                script.body = build_sequence(*head->next);
            scripts_.push_back(std::move(script));
        } else {
            auto stmts = build_sequence(head_id);
            std::move(stmts.begin(), stmts.end(), std::back_inserter(loose_));
        }
    }

    std::vector<Stmt> build_sequence(const std::string& first_id) {
        std::vector<Stmt> out;
        std::string id = first_id;
        while (!id.empty()) {
            const RawBlock* block = find(id);
            if (!block)
                break;
            if (!consumed_.insert(id).second) {
                warn(id, "block '" + id + "' is reachable from more than one chain");
                break;
            }
            if (!block->shadow)
                out.push_back(build_stmt(id, *block));
            id = block->next.value_or("");
        }
        return out;
    }

    Stmt build_stmt(const std::string& id, const RawBlock& block) {
        Stmt stmt;
        stmt.block_id = id;
        const RegistryEntry* entry = registry_.lookup(block.opcode, target_.device);
        if (!entry) {
            stmt.node = unknown_stmt(block);
            return stmt;
        }
        switch (entry->kind.tag) {
        case BlockKind::Tag::ActuatorOn: {
            ActuatorOnStmt s;
            s.actuator = entry->kind.actuator;
            s.colour_args = colour_args(block, *entry);
            s.power = slot_expr(block, entry->power_slot);
            s.content = slot_expr(block, entry->content_slot);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::ActuatorOff: {
            stmt.node = ActuatorOffStmt{entry->kind.actuator};
            break;
        }
        case BlockKind::Tag::TimedActuator: {
            TimedActuatorStmt s;
            s.actuator = entry->kind.actuator;
            s.time = slot_expr(block, entry->time_slot).value_or(Expr{});
            s.colour_args = colour_args(block, *entry);
            s.power = slot_expr(block, entry->power_slot);
            s.content = slot_expr(block, entry->content_slot);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::Move: {
            MoveStmt s;
            s.direction = entry->kind.direction;
            s.power = slot_expr(block, entry->power_slot);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::TimedMove: {
            TimedMoveStmt s;
            s.direction = entry->kind.direction;
            s.power = slot_expr(block, entry->power_slot);
            s.time = slot_expr(block, entry->time_slot);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::Control: {
            ControlStmt s;
            s.variant = entry->kind.control;
            s.condition = slot_expr(block, entry->condition_slot);
            s.time = slot_expr(block, entry->time_slot);
            s.times = slot_expr(block, entry->times_slot);
            if (!entry->body_slots.empty())
                s.body = substack(block, entry->body_slots[0]);
            if (entry->body_slots.size() > 1)
                s.else_body = substack(block, entry->body_slots[1]);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::VariableSet: {
            SetVariableStmt s;
            s.variable = field_value(block, entry->variable_field);
            s.value = slot_expr(block, entry->value_slot);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::VariableChange: {
            ChangeVariableStmt s;
            s.variable = field_value(block, entry->variable_field);
            s.delta = slot_expr(block, entry->value_slot);
            stmt.node = std::move(s);
            break;
        }
        case BlockKind::Tag::Hat: {
            // hat in statement position: keep it visible as an unknown node
            warn(id, "hat block '" + id + "' found mid-chain");
            stmt.node = unknown_stmt(block);
            break;
        }
        default:
            stmt.node = unknown_stmt(block);
            break;
        }
        return stmt;
    }

    UnknownStmt unknown_stmt(const RawBlock& block) {
        UnknownStmt s;
        s.opcode = block.opcode;
        for (const auto& [slot, input] : block.inputs) {
            if (input.tag == RawInput::Tag::BlockRef) {
                const RawBlock* ref = find(input.ref);
                if (ref && !ref->shadow && is_statement_opcode(*ref)) {
                    auto stmts = build_sequence(input.ref);
                    std::move(stmts.begin(), stmts.end(), std::back_inserter(s.body));
                    continue;
                }
            }
            if (auto e = input_expr(input))
                s.inputs.push_back(std::move(*e));
        }
        return s;
    }

    bool is_statement_opcode(const RawBlock& block) const {
        const RegistryEntry* entry = registry_.lookup(block.opcode, target_.device);
        if (!entry)
            return !block.next.has_value() ? false : true; // unknown chains count
        switch (entry->kind.tag) {
        case BlockKind::Tag::SensorReporter:
        case BlockKind::Tag::BooleanSensor:
        case BlockKind::Tag::Operator:
            return false;
        default:
            return true;
        }
    }

    std::string field_value(const RawBlock& block, const std::string& field) const {
        auto it = block.fields.find(field);
        return it == block.fields.end() ? std::string{} : it->second;
    }

    std::vector<Stmt> substack(const RawBlock& block, const std::string& slot) {
        auto it = block.inputs.find(slot);
        if (it == block.inputs.end() || it->second.tag != RawInput::Tag::BlockRef)
            return {};
        return build_sequence(it->second.ref);
    }

    std::vector<Expr> colour_args(const RawBlock& block, const RegistryEntry& entry) {
        std::vector<Expr> out;
        for (const std::string& slot : entry.colour_slots)
            if (auto e = slot_expr(block, slot))
                out.push_back(std::move(*e));
        return out;
    }

    std::optional<Expr> slot_expr(const RawBlock& block, const std::string& slot) {
        if (slot.empty())
            return std::nullopt;
        auto it = block.inputs.find(slot);
        if (it == block.inputs.end())
            return std::nullopt;
        return input_expr(it->second);
    }

    std::optional<Expr> input_expr(const RawInput& input) {
        switch (input.tag) {
        case RawInput::Tag::Missing:
            return std::nullopt;
        case RawInput::Tag::Literal:
            return literal_expr(input);
        case RawInput::Tag::BlockRef:
            return build_expr(input.ref);
        }
        return std::nullopt;
    }

    Expr literal_expr(const RawInput& input) {
        Expr e;
        switch (input.kind) {
        case LiteralKind::Number:
            if (auto v = parse_number(input.text)) {
                e.node = NumberLit{*v};
            } else {
                // non-numeric text in a number slot: treated as unknown value
                e.node = StringLit{input.text};
            }
            break;
        case LiteralKind::Colour:
            if (auto c = parse_hex_colour(input.text)) {
                e.node = std::move(*c);
            } else if (auto v = parse_number(input.text)) {
                e.node = ColourLit{{*v}};
            } else {
                e.node = StringLit{input.text};
            }
            break;
        case LiteralKind::String:
            e.node = StringLit{input.text};
            break;
        case LiteralKind::Variable:
            e.node = VarRef{input.text};
            break;
        case LiteralKind::Broadcast:
            e.node = StringLit{input.text};
            break;
        case LiteralKind::Unknown:
            e.node = UnknownExpr{};
            break;
        }
        return e;
    }

    Expr build_expr(const std::string& id) {
        Expr e;
        e.block_id = id;
        const RawBlock* block = find(id);
        if (!block) {
            e.node = UnknownExpr{};
            return e;
        }
        if (!expr_guard_.insert(id).second) {
            warn(id, "expression block '" + id + "' is part of a reference cycle");
            e.node = UnknownExpr{block->opcode, {}};
            return e;
        }
        const RegistryEntry* entry = registry_.lookup(block->opcode, target_.device);
        if (!entry) {
            if (block->shadow && block->fields.size() == 1) {
                // dropdown menu block: its single field is the value
                e.block_id.clear();
                e.node = StringLit{block->fields.begin()->second};
            } else {
                UnknownExpr u;
                u.opcode = block->opcode;
                for (const auto& [slot, input] : block->inputs)
                    if (auto child = input_expr(input))
                        u.children.push_back(std::move(*child));
                e.node = std::move(u);
            }
            expr_guard_.erase(id);
            return e;
        }
        switch (entry->kind.tag) {
        case BlockKind::Tag::SensorReporter:
            e.node = SensorQuery{entry->kind.sensor};
            break;
        case BlockKind::Tag::BooleanSensor:
            e.node = BooleanQuery{entry->kind.boolean_kind};
            break;
        case BlockKind::Tag::Operator: {
            if (entry->kind.op == OperatorVariant::Not) {
                NotExpr n;
                if (!entry->operand_slots.empty())
                    if (auto child = slot_expr(*block, entry->operand_slots[0]))
                        n.operand.push_back(std::move(*child));
                e.node = std::move(n);
            } else {
                BinaryExpr b;
                b.op = entry->kind.op;
                for (const std::string& slot : entry->operand_slots) {
                    auto child = slot_expr(*block, slot);
                    b.operands.push_back(child ? std::move(*child) : Expr{});
                }
                e.node = std::move(b);
            }
            break;
        }
        default: {
            // statement-kind block in expression position
            warn(id, "block '" + id + "' (" + block->opcode +
                     ") used in an expression slot");
            UnknownExpr u;
            u.opcode = block->opcode;
            e.node = std::move(u);
            break;
        }
        }
        expr_guard_.erase(id);
        return e;
    }

    const RawTarget& target_;
    const Registry& registry_;
    std::vector<Warning>& warnings_;
    std::vector<Script> scripts_;
    std::vector<Stmt> loose_;
    std::set<std::string> consumed_;
    std::set<std::string> expr_guard_;
    std::set<std::string> referenced_;
};

} // namespace

Project build_ast(const RawProject& raw, const Registry& registry) {
    Project project;
    project.source_path = raw.source_path;
    for (const RawTarget& target : raw.targets) {
        AstBuilder builder(target, registry, project.warnings);
        project.actors.push_back(builder.build());
    }
    return project;
}

Project load_and_build(const std::string& path, const Registry& registry) {
    std::vector<Warning> warnings;
    RawProject raw = load_project(path, warnings);
    Project project = build_ast(raw, registry);
    project.warnings.insert(project.warnings.begin(), warnings.begin(), warnings.end());
    return project;
}

} // namespace botlint
