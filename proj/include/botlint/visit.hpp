#pragma once

#include <vector>

#include "botlint/ast.hpp"

namespace botlint {

struct VisitContext {
    const Actor* actor = nullptr;
    const Script* script = nullptr;             // null while visiting loose blocks
    std::vector<const Stmt*> stmt_ancestors;    // innermost last
    std::vector<const Stmt*> loop_ancestors;    // forever / repeat / repeat-until
};

// Depth-first, document-order traversal. Every actor, script, hat, statement
// and expression node is visited exactly once.
class AstVisitor {
public:
    virtual ~AstVisitor() = default;
    virtual void visit_actor(const Actor&) {}
    virtual void visit_script(const Script&, const VisitContext&) {}
    virtual void visit_hat(const Hat&, const VisitContext&) {}
    virtual void visit_stmt(const Stmt&, const VisitContext&) {}
    virtual void visit_expr(const Expr&, const VisitContext&) {}
};

void traverse(const Project& project, AstVisitor& visitor);
void traverse_actor(const Actor& actor, AstVisitor& visitor);

} // namespace botlint
