#include "argforge/filter.hpp"

namespace argforge {

namespace {

struct Walker {
    const std::set<Prim>& chosen;
    const Classification& cls;
    FeatureProfile& p;

    bool condition_touches_chosen(const Expr& cond) const {
        bool hit = false;
        for_each_expr(cond, [&](const Expr& e) {
            if (hit || e.id < 0 || e.id >= (int)cls.size()) return;
            const Binding& b = cls[e.id];
            if (b.resolved() && b.type && b.type->is_primitive() &&
                chosen.count(b.type->prim))
                hit = true;
        });
        return hit;
    }

    void count_expr(const Expr& e) {
        for_each_expr(e, [&](const Expr& n) {
            if (n.kind == ExprKind::Binary) {
                auto op = static_cast<const BinaryExpr&>(n).op;
                if (op == BinaryExpr::Op::And || op == BinaryExpr::Op::Or)
                    p.boolean_connective_count++;
            }
            if (n.kind == ExprKind::Cast || n.kind == ExprKind::ArrayNew)
                p.type_expression_count++;
        });
    }

    void walk(const Stmt& s) {
        switch (s.kind) {
            case StmtKind::Block:
                for (auto& c : static_cast<const BlockStmt&>(s).stmts) walk(*c);
                break;
            case StmtKind::VarDecl: {
                auto& n = static_cast<const VarDeclStmt&>(s);
                if (n.init) count_expr(*n.init);
                break;
            }
            case StmtKind::ExprStmt:
                count_expr(*static_cast<const ExprStmt&>(s).expr);
                break;
            case StmtKind::Assign: {
                auto& n = static_cast<const AssignStmt&>(s);
                count_expr(*n.target);
                count_expr(*n.value);
                break;
            }
            case StmtKind::If: {
                auto& n = static_cast<const IfStmt&>(s);
                p.if_count++;
                if (condition_touches_chosen(*n.cond)) p.if_on_chosen_primitive++;
                count_expr(*n.cond);
                walk(*n.then_block);
                if (n.else_block) walk(*n.else_block);
                break;
            }
            case StmtKind::While: {
                auto& n = static_cast<const WhileStmt&>(s);
                p.loop_count++;
                count_expr(*n.cond);
                walk(*n.body);
                break;
            }
            case StmtKind::For: {
                auto& n = static_cast<const ForStmt&>(s);
                p.loop_count++;
                if (n.init) walk(*n.init);
                if (n.cond) count_expr(*n.cond);
                if (n.update) walk(*n.update);
                walk(*n.body);
                break;
            }
            case StmtKind::Return: {
                auto& n = static_cast<const ReturnStmt&>(s);
                if (n.value) count_expr(*n.value);
                break;
            }
            case StmtKind::Assert: {
                auto& n = static_cast<const AssertStmt&>(s);
                p.assert_count++;
                count_expr(*n.cond);
                if (n.message) count_expr(*n.message);
                break;
            }
            case StmtKind::Throw:
                count_expr(*static_cast<const ThrowStmt&>(s).value);
                break;
        }
    }
};

} // namespace

FeatureProfile profile(const Ast& unit, const std::set<Prim>& chosen,
                       const TypeTable& table) {
    FeatureProfile p;
    Classification cls = classify_unit(unit, table);
    Walker w{chosen, cls, p};
    for (auto& f : unit.cls.fields)
        if (f.init) w.count_expr(*f.init);
    for (auto& m : unit.cls.methods) {
        p.method_count++;
        if (m.body) w.walk(*m.body);
    }
    return p;
}

bool accept(const FeatureProfile& p, const FilterCriteria& c) {
    return p.if_count >= c.min_if &&
           p.if_on_chosen_primitive >= c.min_if_on_chosen_primitive &&
           p.loop_count >= c.min_loops &&
           p.boolean_connective_count >= c.min_connectives &&
           p.type_expression_count >= c.min_type_expressions &&
           p.type_parameter_count >= c.min_type_parameters &&
           p.method_count >= c.min_methods;
}

} // namespace argforge
