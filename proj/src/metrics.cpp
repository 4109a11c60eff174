#include "botlint/metrics.hpp"

#include <algorithm>

#include "botlint/queries.hpp"
#include "botlint/visit.hpp"

namespace botlint {

namespace {

bool is_decision(const Stmt& stmt) {
    auto* c = as_control(stmt);
    if (!c)
        return false;
    switch (c->variant) {
    case ControlVariant::If:
    case ControlVariant::IfElse:
    case ControlVariant::Forever:
    case ControlVariant::RepeatTimes:
    case ControlVariant::RepeatUntil:
    case ControlVariant::WaitUntil:
        return true;
    default:
        return false;
    }
}

// counts hats, statements and expression blocks; literals have no block id
class BlockCounter : public AstVisitor {
public:
    long count = 0;
    void visit_hat(const Hat&, const VisitContext&) override { ++count; }
    void visit_stmt(const Stmt&, const VisitContext&) override { ++count; }
    void visit_expr(const Expr& expr, const VisitContext&) override {
        if (!expr.block_id.empty())
            ++count;
    }
};

} // namespace

long cyclomatic(const Script& script) {
    long decisions = 0;
    for_each_stmt(script, [&](const Stmt& s) {
        if (is_decision(s))
            ++decisions;
    });
    return 1 + decisions;
}

long script_length(const Script& script) {
    long stmts = 0;
    for_each_stmt(script, [&](const Stmt&) { ++stmts; });
    return stmts + 1;
}

ProjectMetrics compute_metrics(const Project& project) {
    ProjectMetrics m;

    BlockCounter counter;
    traverse(project, counter);
    m.block_count = counter.count;

    for (const Actor& actor : project.actors) {
        for (const Script& script : actor.scripts) {
            ++m.script_count;
            long cc = cyclomatic(script);
            m.wmc += cc;
            m.most_complex_script = std::max(m.most_complex_script, cc);
            m.longest_script = std::max(m.longest_script, script_length(script));
        }
    }
    return m;
}

} // namespace botlint
