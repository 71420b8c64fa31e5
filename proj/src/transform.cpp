#include "argforge/transform.hpp"

#include <cctype>
#include <set>

namespace argforge {

namespace {

std::string simple_name(const std::string& qualified) {
    size_t dot = qualified.rfind('.');
    return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

std::string nondet_name(Prim p) {
    std::string n = prim_name(p);
    n[0] = (char)std::toupper((unsigned char)n[0]);
    return "nondet" + n;
}

ExprPtr make_nondet(Prim p) {
    return std::make_unique<CallExpr>(std::make_unique<NameRef>("Verifier"),
                                      nondet_name(p), std::vector<ExprPtr>{});
}

std::set<std::string> collect_names(const Ast& unit) {
    std::set<std::string> names;
    names.insert(unit.cls.name);
    for (auto& f : unit.cls.fields) names.insert(f.name);
    for (auto& m : unit.cls.methods) {
        names.insert(m.name);
        for (auto& p : m.params) names.insert(p.name);
    }
    for_each_expr(unit, [&](const Expr& e) {
        if (e.kind == ExprKind::Name)
            names.insert(static_cast<const NameRef&>(e).name);
    });
    // local declarations
    std::function<void(const Stmt&)> walk = [&](const Stmt& s) {
        if (s.kind == StmtKind::VarDecl)
            names.insert(static_cast<const VarDeclStmt&>(s).name);
        switch (s.kind) {
            case StmtKind::Block:
                for (auto& c : static_cast<const BlockStmt&>(s).stmts) walk(*c);
                break;
            case StmtKind::If: {
                auto& n = static_cast<const IfStmt&>(s);
                walk(*n.then_block);
                if (n.else_block) walk(*n.else_block);
                break;
            }
            case StmtKind::While:
                walk(*static_cast<const WhileStmt&>(s).body);
                break;
            case StmtKind::For: {
                auto& n = static_cast<const ForStmt&>(s);
                if (n.init) walk(*n.init);
                if (n.update) walk(*n.update);
                walk(*n.body);
                break;
            }
            default:
                break;
        }
    };
    for (auto& m : unit.cls.methods)
        if (m.body) walk(*m.body);
    return names;
}

// ---------------------------------------------------------------------------

struct Rewriter {
    Ast& unit;
    const Allowlist& allowlist;
    TransformConfig cfg;
    std::vector<InjectionEntry>* inj = nullptr;
    std::vector<RemovalEntry>* rem = nullptr;

    TypeTable table;
    Classification cls;
    std::set<std::string> used_names;
    int fresh_counter = 0;
    const MethodDecl* current_method = nullptr;
    bool changed = false;

    void refresh() {
        table = build_type_table(unit, allowlist);
        assign_ids(unit);
        cls = classify_unit(unit, table);
        used_names = collect_names(unit);
    }

    const Binding* binding(const Expr& e) const {
        if (e.id < 0 || e.id >= (int)cls.size()) return nullptr;
        return &cls[e.id];
    }
    bool unresolved(const Expr& e) const {
        const Binding* b = binding(e);
        return !b || !b->resolved();
    }
    std::optional<Type> type_of(const Expr& e) const {
        const Binding* b = binding(e);
        if (b && b->resolved() && b->type) return b->type;
        return std::nullopt;
    }
    bool subtree_unresolved(const Expr& e) const {
        bool any = false;
        for_each_expr(e, [&](const Expr& n) {
            if (!any && unresolved(n)) any = true;
        });
        return any;
    }

    std::string fresh(const std::string& prefix) {
        while (true) {
            std::string cand = prefix + std::to_string(fresh_counter++);
            if (!used_names.count(cand)) {
                used_names.insert(cand);
                return cand;
            }
        }
    }

    void log_inject(SourceSpan span, std::string stub) {
        if (inj) inj->push_back({span, std::move(stub)});
    }
    void log_remove(SourceSpan span, std::string reason) {
        if (rem) rem->push_back({span, std::move(reason)});
    }

    // ---- type admissibility ----------------------------------------------

    bool type_ok(const Type& t) const {
        switch (t.k) {
            case Type::K::Void:
            case Type::K::Primitive:
            case Type::K::PrimArray:
                return true;
            case Type::K::Named:
            case Type::K::NamedArray:
                if (simple_name(t.name) == table.class_name) return true;
                return table.allowlist.find(t.name) != nullptr;
        }
        return false;
    }

    // ---- expected parameter types for calls -------------------------------

    std::optional<std::vector<Type>> call_param_types(const CallExpr& call) const {
        auto from_allow = [&](const AllowType& at) -> std::optional<std::vector<Type>> {
            const std::vector<Type>* found = nullptr;
            for (auto& m : at.members) {
                if (m.name != call.name || !m.params ||
                    m.params->size() != call.args.size())
                    continue;
                if (found) return std::nullopt;   // ambiguous overload
                found = &*m.params;
            }
            if (found) return *found;
            return std::nullopt;
        };
        auto own = [&]() -> std::optional<std::vector<Type>> {
            auto it = table.methods.find(call.name);
            if (it == table.methods.end() || it->second.params.size() != call.args.size())
                return std::nullopt;
            return it->second.params;
        };
        if (!call.base) return own();
        if (call.base->kind == ExprKind::Name) {
            auto& n = static_cast<const NameRef&>(*call.base);
            if (n.name == table.class_name) return own();
            if (const AllowType* at = table.allowlist.find(n.name)) return from_allow(*at);
        }
        if (auto bt = type_of(*call.base)) {
            if (bt->k == Type::K::Named) {
                if (simple_name(bt->name) == table.class_name) return own();
                if (const AllowType* at = table.allowlist.find(bt->name))
                    return from_allow(*at);
            }
        }
        return std::nullopt;
    }

    // ---- expression-level injection ---------------------------------------

    // Prefers the smallest unresolvable site: operands are fixed first, and
    // the node itself is replaced only when no descent made progress.
    bool fix_expr(ExprPtr& e, std::optional<Type> expected, bool allow_top) {
        const Binding* b = binding(*e);
        bool top_unresolved = !b || !b->resolved();

        bool any = false;
        switch (e->kind) {
            case ExprKind::Binary: {
                auto& n = static_cast<BinaryExpr&>(*e);
                using Op = BinaryExpr::Op;
                std::optional<Type> le, re;
                switch (n.op) {
                    case Op::And: case Op::Or:
                        le = re = Type::of(Prim::Boolean);
                        break;
                    case Op::Eq: case Op::Ne: {
                        auto lt = type_of(*n.lhs);
                        auto rt = type_of(*n.rhs);
                        if (lt && lt->is_primitive()) re = lt;
                        if (rt && rt->is_primitive()) le = rt;
                        break;
                    }
                    default: {
                        // arithmetic / relational / shift / bitwise: push the
                        // resolved side's numeric type at the other side
                        auto lt = type_of(*n.lhs);
                        auto rt = type_of(*n.rhs);
                        if (lt && lt->is_numeric()) re = lt;
                        if (rt && rt->is_numeric()) le = rt;
                        if (!le && expected && expected->is_numeric()) le = expected;
                        if (!re && expected && expected->is_numeric()) re = expected;
                        break;
                    }
                }
                any |= fix_expr(n.lhs, le, true);
                any |= fix_expr(n.rhs, re, true);
                break;
            }
            case ExprKind::Unary: {
                auto& n = static_cast<UnaryExpr&>(*e);
                std::optional<Type> oe;
                if (n.op == UnaryExpr::Op::Not) oe = Type::of(Prim::Boolean);
                else if (expected && expected->is_numeric()) oe = expected;
                any |= fix_expr(n.operand, oe, true);
                break;
            }
            case ExprKind::Conditional: {
                auto& n = static_cast<ConditionalExpr&>(*e);
                any |= fix_expr(n.cond, Type::of(Prim::Boolean), true);
                auto tt = type_of(*n.then_expr);
                auto ft = type_of(*n.else_expr);
                std::optional<Type> arm = expected;
                if (!arm && tt && tt->is_primitive()) arm = tt;
                if (!arm && ft && ft->is_primitive()) arm = ft;
                any |= fix_expr(n.then_expr, arm, true);
                any |= fix_expr(n.else_expr, arm, true);
                break;
            }
            case ExprKind::Cast: {
                auto& n = static_cast<CastExpr&>(*e);
                std::optional<Type> oe;
                if (n.target.is_primitive()) oe = n.target;
                any |= fix_expr(n.operand, oe, true);
                break;
            }
            case ExprKind::Call: {
                auto& n = static_cast<CallExpr&>(*e);
                auto params = call_param_types(n);
                for (size_t i = 0; i < n.args.size(); i++) {
                    std::optional<Type> pe;
                    if (params) pe = (*params)[i];
                    any |= fix_expr(n.args[i], pe, true);
                }
                break;
            }
            case ExprKind::ObjectNew: {
                auto& n = static_cast<ObjectNewExpr&>(*e);
                for (auto& a : n.args) any |= fix_expr(a, std::nullopt, true);
                break;
            }
            case ExprKind::ArrayNew:
                any |= fix_expr(static_cast<ArrayNewExpr&>(*e).length,
                                Type::of(Prim::Int), true);
                break;
            case ExprKind::ArrayIndex: {
                auto& n = static_cast<ArrayIndexExpr&>(*e);
                any |= fix_expr(n.base, std::nullopt, false);
                any |= fix_expr(n.index, Type::of(Prim::Int), true);
                break;
            }
            case ExprKind::FieldAccess:
                any |= fix_expr(static_cast<FieldAccessExpr&>(*e).base, std::nullopt, false);
                break;
            default:
                break;
        }
        if (!any && top_unresolved && allow_top && expected && expected->is_primitive()) {
            log_inject(e->span, nondet_name(expected->prim));
            e = make_nondet(expected->prim);
            return true;
        }
        return any;
    }

    // ---- array synthesis --------------------------------------------------

    /// Emits: bounded nondet length, the array creation, and an element
    /// fill loop. `target` must already name the array variable.
    void emit_array_fill(std::vector<StmtPtr>& out, const std::string& target,
                         Prim elem, bool declare) {
        std::string len = fresh("ndLen");
        std::string idx = fresh("ndI");
        long long bound = cfg.array_length_bound;

        out.push_back(std::make_unique<VarDeclStmt>(Type::of(Prim::Int), len,
                                                    make_nondet(Prim::Int)));
        auto clamp = [&](BinaryExpr::Op op, long long value) {
            auto iff = std::make_unique<IfStmt>();
            iff->cond = std::make_unique<BinaryExpr>(
                op, std::make_unique<NameRef>(len),
                std::make_unique<IntLit>(value, false));
            iff->then_block = std::make_unique<BlockStmt>();
            iff->then_block->stmts.push_back(std::make_unique<AssignStmt>(
                std::make_unique<NameRef>(len),
                std::make_unique<IntLit>(value, false)));
            out.push_back(std::move(iff));
        };
        clamp(BinaryExpr::Op::Lt, 0);
        clamp(BinaryExpr::Op::Gt, bound);

        ExprPtr creation = std::make_unique<ArrayNewExpr>(elem, std::make_unique<NameRef>(len));
        if (declare)
            out.push_back(std::make_unique<VarDeclStmt>(Type::array_of(elem), target,
                                                        std::move(creation)));
        else
            out.push_back(std::make_unique<AssignStmt>(std::make_unique<NameRef>(target),
                                                       std::move(creation)));

        auto loop = std::make_unique<ForStmt>();
        loop->init = std::make_unique<VarDeclStmt>(Type::of(Prim::Int), idx,
                                                   std::make_unique<IntLit>(0, false));
        loop->cond = std::make_unique<BinaryExpr>(BinaryExpr::Op::Lt,
                                                  std::make_unique<NameRef>(idx),
                                                  std::make_unique<NameRef>(len));
        loop->update = std::make_unique<AssignStmt>(
            std::make_unique<NameRef>(idx),
            std::make_unique<BinaryExpr>(BinaryExpr::Op::Add,
                                         std::make_unique<NameRef>(idx),
                                         std::make_unique<IntLit>(1, false)));
        loop->body = std::make_unique<BlockStmt>();
        loop->body->stmts.push_back(std::make_unique<AssignStmt>(
            std::make_unique<ArrayIndexExpr>(std::make_unique<NameRef>(target),
                                             std::make_unique<NameRef>(idx)),
            make_nondet(elem)));
        out.push_back(std::move(loop));
    }

    // ---- injection over statements ----------------------------------------

    void inject_block(BlockStmt& b) {
        std::vector<StmtPtr> out;
        out.reserve(b.stmts.size());
        for (auto& s : b.stmts) {
            bool replaced = false;
            switch (s->kind) {
                case StmtKind::Block:
                    inject_block(static_cast<BlockStmt&>(*s));
                    break;
                case StmtKind::VarDecl: {
                    auto& n = static_cast<VarDeclStmt&>(*s);
                    if (n.init) {
                        if (n.type.is_primitive()) {
                            changed |= fix_expr(n.init, n.type, true);
                        } else if (n.type.is_prim_array() && subtree_unresolved(*n.init) &&
                                   !type_of(*n.init)) {
                            log_inject(n.init->span,
                                       std::string(nondet_name(n.type.prim)) + "[]");
                            emit_array_fill(out, n.name, n.type.prim, true);
                            changed = true;
                            replaced = true;
                        } else {
                            changed |= fix_expr(n.init, std::nullopt, false);
                        }
                    }
                    break;
                }
                case StmtKind::Assign: {
                    auto& n = static_cast<AssignStmt&>(*s);
                    auto tt = type_of(*n.target);
                    if (tt && tt->is_primitive()) {
                        changed |= fix_expr(n.value, tt, true);
                    } else if (tt && tt->is_prim_array() &&
                               n.target->kind == ExprKind::Name &&
                               subtree_unresolved(*n.value) && !type_of(*n.value)) {
                        log_inject(n.value->span,
                                   std::string(nondet_name(tt->prim)) + "[]");
                        emit_array_fill(out, static_cast<NameRef&>(*n.target).name,
                                        tt->prim, false);
                        changed = true;
                        replaced = true;
                    } else {
                        changed |= fix_expr(n.target, std::nullopt, false);
                        changed |= fix_expr(n.value, std::nullopt, false);
                    }
                    break;
                }
                case StmtKind::ExprStmt:
                    changed |= fix_expr(static_cast<ExprStmt&>(*s).expr, std::nullopt, false);
                    break;
                case StmtKind::If: {
                    auto& n = static_cast<IfStmt&>(*s);
                    changed |= fix_expr(n.cond, Type::of(Prim::Boolean), false);
                    inject_block(*n.then_block);
                    if (n.else_block) inject_block(*n.else_block);
                    break;
                }
                case StmtKind::While: {
                    auto& n = static_cast<WhileStmt&>(*s);
                    changed |= fix_expr(n.cond, Type::of(Prim::Boolean), false);
                    inject_block(*n.body);
                    break;
                }
                case StmtKind::For: {
                    auto& n = static_cast<ForStmt&>(*s);
                    if (n.init && n.init->kind == StmtKind::VarDecl) {
                        auto& d = static_cast<VarDeclStmt&>(*n.init);
                        if (d.init && d.type.is_primitive())
                            changed |= fix_expr(d.init, d.type, true);
                    }
                    if (n.cond)
                        changed |= fix_expr(n.cond, Type::of(Prim::Boolean), false);
                    if (n.update && n.update->kind == StmtKind::Assign) {
                        auto& a = static_cast<AssignStmt&>(*n.update);
                        auto tt = type_of(*a.target);
                        if (tt && tt->is_primitive())
                            changed |= fix_expr(a.value, tt, true);
                    }
                    inject_block(*n.body);
                    break;
                }
                case StmtKind::Return: {
                    auto& n = static_cast<ReturnStmt&>(*s);
                    if (n.value && current_method &&
                        current_method->return_type.is_primitive())
                        changed |= fix_expr(n.value, current_method->return_type, true);
                    else if (n.value)
                        changed |= fix_expr(n.value, std::nullopt, false);
                    break;
                }
                case StmtKind::Assert: {
                    auto& n = static_cast<AssertStmt&>(*s);
                    changed |= fix_expr(n.cond, Type::of(Prim::Boolean), false);
                    break;
                }
                case StmtKind::Throw:
                    changed |= fix_expr(static_cast<ThrowStmt&>(*s).value, std::nullopt, false);
                    break;
            }
            if (!replaced) out.push_back(std::move(s));
        }
        b.stmts = std::move(out);
    }

    bool run_inject() {
        refresh();
        changed = false;
        for (auto& f : unit.cls.fields)
            if (f.init && f.type.is_primitive()) changed |= fix_expr(f.init, f.type, true);
        for (auto& m : unit.cls.methods) {
            if (!m.body) continue;
            current_method = &m;
            inject_block(*m.body);
        }
        current_method = nullptr;
        return changed;
    }

    // ---- pruning ----------------------------------------------------------

    bool stmt_exprs_unresolved(const Stmt& s) const {
        auto check = [&](const Expr* e) { return e && subtree_unresolved(*e); };
        switch (s.kind) {
            case StmtKind::Block:
                return false;
            case StmtKind::VarDecl: {
                auto& n = static_cast<const VarDeclStmt&>(s);
                return !type_ok(n.type) || check(n.init.get());
            }
            case StmtKind::ExprStmt:
                return check(static_cast<const ExprStmt&>(s).expr.get());
            case StmtKind::Assign: {
                auto& n = static_cast<const AssignStmt&>(s);
                return check(n.target.get()) || check(n.value.get());
            }
            case StmtKind::Return:
                return check(static_cast<const ReturnStmt&>(s).value.get());
            case StmtKind::Assert: {
                auto& n = static_cast<const AssertStmt&>(s);
                return check(n.cond.get()) || check(n.message.get());
            }
            case StmtKind::Throw:
                return check(static_cast<const ThrowStmt&>(s).value.get());
            default:
                return false;   // control flow handled separately
        }
    }

    void prune_block(BlockStmt& b) {
        std::vector<StmtPtr> out;
        out.reserve(b.stmts.size());
        for (auto& s : b.stmts) {
            bool drop = false;
            switch (s->kind) {
                case StmtKind::Block:
                    prune_block(static_cast<BlockStmt&>(*s));
                    break;
                case StmtKind::If: {
                    auto& n = static_cast<IfStmt&>(*s);
                    prune_block(*n.then_block);
                    if (n.else_block) prune_block(*n.else_block);
                    if (subtree_unresolved(*n.cond)) {
                        log_inject(n.cond->span, "nondetBoolean(condition)");
                        n.cond = make_nondet(Prim::Boolean);
                        changed = true;
                    }
                    break;
                }
                case StmtKind::While: {
                    auto& n = static_cast<WhileStmt&>(*s);
                    prune_block(*n.body);
                    if (subtree_unresolved(*n.cond)) {
                        log_inject(n.cond->span, "nondetBoolean(condition)");
                        n.cond = make_nondet(Prim::Boolean);
                        changed = true;
                    }
                    break;
                }
                case StmtKind::For: {
                    auto& n = static_cast<ForStmt&>(*s);
                    prune_block(*n.body);
                    bool header_bad = (n.init && stmt_exprs_unresolved(*n.init)) ||
                                      (n.update && stmt_exprs_unresolved(*n.update));
                    if (header_bad) {
                        log_remove(n.span, "STMT_UNRESOLVED");
                        drop = true;
                        changed = true;
                        break;
                    }
                    if (n.cond && subtree_unresolved(*n.cond)) {
                        log_inject(n.cond->span, "nondetBoolean(condition)");
                        n.cond = make_nondet(Prim::Boolean);
                        changed = true;
                    }
                    break;
                }
                default:
                    if (stmt_exprs_unresolved(*s)) {
                        log_remove(s->span, "STMT_UNRESOLVED");
                        drop = true;
                        changed = true;
                    }
                    break;
            }
            if (!drop) out.push_back(std::move(s));
        }
        b.stmts = std::move(out);
    }

    bool run_prune() {
        refresh();
        changed = false;

        std::vector<FieldDecl> kept_fields;
        for (auto& f : unit.cls.fields) {
            if (!type_ok(f.type)) {
                log_remove(f.span, "FIELD_EXTERNAL_TYPE");
                changed = true;
                continue;
            }
            if (f.init && subtree_unresolved(*f.init)) {
                log_remove(f.init->span, "FIELD_INIT_REMOVED");
                f.init.reset();
                changed = true;
            }
            kept_fields.push_back(std::move(f));
        }
        unit.cls.fields = std::move(kept_fields);

        std::vector<MethodDecl> kept_methods;
        for (auto& m : unit.cls.methods) {
            bool sig_ok = m.is_entry() || type_ok(m.return_type);
            if (!m.is_entry())
                for (auto& p : m.params)
                    if (!type_ok(p.type)) sig_ok = false;
            if (!sig_ok) {
                log_remove(m.span, "METHOD_SIGNATURE_EXTERNAL");
                changed = true;
                continue;
            }
            kept_methods.push_back(std::move(m));
        }
        unit.cls.methods = std::move(kept_methods);

        // field/method removal invalidates the classification; statement
        // pruning uses bindings computed against the new table
        refresh();
        for (auto& m : unit.cls.methods)
            if (m.body) prune_block(*m.body);

        std::vector<std::string> kept_imports;
        for (auto& imp : unit.imports) {
            if (table.allowlist.covers_import(imp)) {
                kept_imports.push_back(imp);
            } else {
                log_remove({}, "IMPORT_REMOVED:" + imp);
                changed = true;
            }
        }
        unit.imports = std::move(kept_imports);
        return changed;
    }

    // ---- entry synthesis --------------------------------------------------

    EntryResult run_entry() {
        refresh();
        for (auto& m : unit.cls.methods)
            if (m.is_entry()) return EntryResult::AlreadyPresent;

        std::vector<const MethodDecl*> invocable;
        for (auto& m : unit.cls.methods) {
            bool ok = true;
            for (auto& p : m.params)
                if (!p.type.is_primitive() && !p.type.is_prim_array()) ok = false;
            if (ok) {
                invocable.push_back(&m);
            } else {
                log_remove(m.span, "ENTRY_SKIPPED_PARAMS:" + m.name);
            }
        }
        if (invocable.empty()) return EntryResult::NoInvocableMethod;

        bool needs_instance = false;
        for (auto& f : unit.cls.fields)
            if (!f.is_static) needs_instance = true;
        for (auto& m : unit.cls.methods)
            if (!m.is_static) needs_instance = true;

        MethodDecl main;
        main.vis = Visibility::Public;
        main.is_static = true;
        main.return_type = Type::void_type();
        main.name = "main";
        main.params.push_back({Type::named_array("String"), "args"});
        main.body = std::make_unique<BlockStmt>();

        std::string inst;
        if (needs_instance) {
            inst = fresh("obj");
            main.body->stmts.push_back(std::make_unique<VarDeclStmt>(
                Type::named(unit.cls.name), inst,
                std::make_unique<ObjectNewExpr>(unit.cls.name, std::vector<ExprPtr>{})));
        }

        for (const MethodDecl* m : invocable) {
            std::vector<ExprPtr> args;
            for (auto& p : m->params) {
                if (p.type.is_primitive()) {
                    args.push_back(make_nondet(p.type.prim));
                } else {
                    std::string arr = fresh("ndArr");
                    emit_array_fill(main.body->stmts, arr, p.type.prim, true);
                    args.push_back(std::make_unique<NameRef>(arr));
                }
            }
            ExprPtr base;
            if (!m->is_static) base = std::make_unique<NameRef>(inst);
            main.body->stmts.push_back(std::make_unique<ExprStmt>(
                std::make_unique<CallExpr>(std::move(base), m->name, std::move(args))));
        }
        unit.cls.methods.push_back(std::move(main));
        return EntryResult::Synthesized;
    }
};

void rename_in_stmt(Stmt& s, const std::string& from, const std::string& to);

void rename_in_expr(Expr& e, const std::string& from, const std::string& to) {
    for_each_expr(e, [&](const Expr& ce) {
        Expr& n = const_cast<Expr&>(ce);
        if (n.kind == ExprKind::Name) {
            auto& r = static_cast<NameRef&>(n);
            if (r.name == from) r.name = to;
        } else if (n.kind == ExprKind::ObjectNew) {
            auto& o = static_cast<ObjectNewExpr&>(n);
            if (o.type_name == from) o.type_name = to;
        }
    });
}

void rename_type(Type& t, const std::string& from, const std::string& to) {
    if ((t.k == Type::K::Named || t.k == Type::K::NamedArray) && t.name == from)
        t.name = to;
}

void rename_in_stmt(Stmt& s, const std::string& from, const std::string& to) {
    switch (s.kind) {
        case StmtKind::Block:
            for (auto& c : static_cast<BlockStmt&>(s).stmts) rename_in_stmt(*c, from, to);
            break;
        case StmtKind::VarDecl: {
            auto& n = static_cast<VarDeclStmt&>(s);
            rename_type(n.type, from, to);
            if (n.init) rename_in_expr(*n.init, from, to);
            break;
        }
        case StmtKind::ExprStmt:
            rename_in_expr(*static_cast<ExprStmt&>(s).expr, from, to);
            break;
        case StmtKind::Assign: {
            auto& n = static_cast<AssignStmt&>(s);
            rename_in_expr(*n.target, from, to);
            rename_in_expr(*n.value, from, to);
            break;
        }
        case StmtKind::If: {
            auto& n = static_cast<IfStmt&>(s);
            rename_in_expr(*n.cond, from, to);
            rename_in_stmt(*n.then_block, from, to);
            if (n.else_block) rename_in_stmt(*n.else_block, from, to);
            break;
        }
        case StmtKind::While: {
            auto& n = static_cast<WhileStmt&>(s);
            rename_in_expr(*n.cond, from, to);
            rename_in_stmt(*n.body, from, to);
            break;
        }
        case StmtKind::For: {
            auto& n = static_cast<ForStmt&>(s);
            if (n.init) rename_in_stmt(*n.init, from, to);
            if (n.cond) rename_in_expr(*n.cond, from, to);
            if (n.update) rename_in_stmt(*n.update, from, to);
            rename_in_stmt(*n.body, from, to);
            break;
        }
        case StmtKind::Return: {
            auto& n = static_cast<ReturnStmt&>(s);
            if (n.value) rename_in_expr(*n.value, from, to);
            break;
        }
        case StmtKind::Assert: {
            auto& n = static_cast<AssertStmt&>(s);
            rename_in_expr(*n.cond, from, to);
            if (n.message) rename_in_expr(*n.message, from, to);
            break;
        }
        case StmtKind::Throw:
            rename_in_expr(*static_cast<ThrowStmt&>(s).value, from, to);
            break;
    }
}

} // namespace

bool inject_nondet(Ast& unit, const Allowlist& allowlist, const TransformConfig& cfg,
                   std::vector<InjectionEntry>& log) {
    Rewriter rw{unit, allowlist, cfg, &log, nullptr};
    return rw.run_inject();
}

bool prune_external(Ast& unit, const Allowlist& allowlist,
                    std::vector<RemovalEntry>& removal_log,
                    std::vector<InjectionEntry>& injection_log) {
    Rewriter rw{unit, allowlist, {}, &injection_log, &removal_log};
    return rw.run_prune();
}

EntryResult synthesize_entry(Ast& unit, const TransformConfig& cfg,
                             std::vector<RemovalEntry>& removal_log) {
    static const Allowlist empty;
    Rewriter rw{unit, empty, cfg, nullptr, &removal_log};
    return rw.run_entry();
}

void rename_standardize(Ast& unit, const Provenance& prov) {
    const std::string from = unit.cls.name;
    const std::string to = "Main";
    if (from != to) {
        unit.cls.name = to;
        for (auto& f : unit.cls.fields) {
            rename_type(f.type, from, to);
            if (f.init) rename_in_expr(*f.init, from, to);
        }
        for (auto& m : unit.cls.methods) {
            rename_type(m.return_type, from, to);
            for (auto& p : m.params) rename_type(p.type, from, to);
            if (m.body) rename_in_stmt(*m.body, from, to);
        }
    }
    unit.package_name.reset();

    std::string revision = prov.repo.revision.empty() ? "unknown" : prov.repo.revision;
    unit.header_comment = {
        "origin: " + prov.repo.owner + "/" + prov.repo.name + "@" + revision + " " +
            prov.original_path,
        "class: " + prov.original_class,
        "generated-by: " + prov.tool_version,
    };
}

int count_unresolved(Ast& unit, const Allowlist& allowlist) {
    TypeTable table = build_type_table(unit, allowlist);
    assign_ids(unit);
    Classification cls = classify_unit(unit, table);
    int count = 0;
    for (auto& b : cls)
        if (!b.resolved()) count++;
    return count;
}

TransformOutcome transform_file(const Ast& input, const Allowlist& allowlist,
                                const Provenance& prov, const TransformConfig& cfg) {
    TransformOutcome out;
    out.unit = clone(input);

    int node_budget = 0;
    for_each_expr(out.unit, [&](const Expr&) { node_budget++; });
    node_budget = node_budget * 2 + 16;

    // Iterate to a fixpoint: prune always gets a chance even when no
    // expression is unresolved, since external-typed fields and stray
    // imports carry no expression bindings of their own.
    for (int iter = 0; iter < node_budget; iter++) {
        if (inject_nondet(out.unit, allowlist, cfg, out.injection_log)) continue;
        if (prune_external(out.unit, allowlist, out.removal_log, out.injection_log))
            continue;
        break;
    }
    if (count_unresolved(out.unit, allowlist) != 0) {
        out.status = TransformStatus::RejectedUnresolvable;
        return out;
    }

    if (out.unit.cls.methods.empty()) {
        out.status = TransformStatus::RejectedEmpty;
        return out;
    }

    EntryResult er = synthesize_entry(out.unit, cfg, out.removal_log);
    if (er == EntryResult::NoInvocableMethod) {
        out.status = TransformStatus::RejectedEmpty;
        return out;
    }
    rename_standardize(out.unit, prov);
    out.status = TransformStatus::Transformed;
    return out;
}

} // namespace argforge
