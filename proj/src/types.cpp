#include "argforge/types.hpp"

#include <algorithm>

namespace argforge {

namespace {

int numeric_rank(Prim p) {
    switch (p) {
        case Prim::Byte: return 1;
        case Prim::Short: return 2;
        case Prim::Char: return 2;   // widens alongside short
        case Prim::Int: return 3;
        case Prim::Long: return 4;
        case Prim::Float: return 5;
        case Prim::Double: return 6;
        case Prim::Boolean: return 0;
    }
    return 0;
}

bool is_integral(const Type& t) {
    return t.is_primitive() && t.prim != Prim::Boolean && t.prim != Prim::Float &&
           t.prim != Prim::Double;
}

bool is_boolean(const Type& t) {
    return t.is_primitive() && t.prim == Prim::Boolean;
}

std::string simple_name(const std::string& qualified) {
    size_t dot = qualified.rfind('.');
    return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

bool same_named(const Type& a, const Type& b) {
    return a.k == b.k && simple_name(a.name) == simple_name(b.name);
}

} // namespace

Type promote(const Type& a, const Type& b) {
    if (a.prim == Prim::Double || b.prim == Prim::Double) return Type::of(Prim::Double);
    if (a.prim == Prim::Float || b.prim == Prim::Float) return Type::of(Prim::Float);
    if (a.prim == Prim::Long || b.prim == Prim::Long) return Type::of(Prim::Long);
    return Type::of(Prim::Int);
}

Type promote_unary(const Type& t) {
    if (t.prim == Prim::Byte || t.prim == Prim::Short || t.prim == Prim::Char)
        return Type::of(Prim::Int);
    return t;
}

bool assignable(const Type& from, const Type& to) {
    if (from == to) return true;
    if (from.is_primitive() && to.is_primitive()) {
        if (from.prim == Prim::Boolean || to.prim == Prim::Boolean)
            return from.prim == to.prim;
        if (from.prim == Prim::Char)
            return numeric_rank(to.prim) >= numeric_rank(Prim::Int);
        if (to.prim == Prim::Char) return false;
        return numeric_rank(from.prim) <= numeric_rank(to.prim);
    }
    if ((from.k == Type::K::Named && to.k == Type::K::Named) ||
        (from.k == Type::K::NamedArray && to.k == Type::K::NamedArray))
        return same_named(from, to);
    return false;
}

TypeTable build_type_table(const Ast& unit, Allowlist allowlist) {
    TypeTable table;
    table.class_name = unit.cls.name;
    table.allowlist = std::move(allowlist);
    table.allowlist.add_verifier_surface();

    for (auto& f : unit.cls.fields) {
        auto [it, inserted] = table.fields.try_emplace(f.name,
                                                       TypeTable::Member{f.type, f.is_static});
        if (!inserted)
            throw CompileError("RESOLVE_FAIL", f.span,
                               "duplicate field '" + f.name + "' at " + to_string(f.span));
    }
    for (auto& m : unit.cls.methods) {
        MethodSig sig;
        sig.return_type = m.return_type;
        sig.is_static = m.is_static;
        for (auto& p : m.params) sig.params.push_back(p.type);
        auto [it, inserted] = table.methods.try_emplace(m.name, std::move(sig));
        if (!inserted)
            throw CompileError("RESOLVE_FAIL", m.span,
                               "duplicate method '" + m.name + "' at " + to_string(m.span));
    }
    return table;
}

namespace {

struct Classifier {
    const TypeTable& table;
    Classification* out;   // may be null (standalone resolve)
    std::vector<std::map<std::string, Type>> scopes;

    const Type* lookup_local(const std::string& name) const {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it)
            if (auto f = it->find(name); f != it->end()) return &f->second;
        return nullptr;
    }

    Binding record(const Expr& e, Binding b) {
        if (out && e.id >= 0 && e.id < (int)out->size()) (*out)[e.id] = b;
        return b;
    }

    static Binding unresolved() { return {}; }
    static Binding of(Binding::Kind k, Type t) { return {k, std::move(t)}; }

    // ---- allowlist lookups ------------------------------------------------

    Binding allow_field(const AllowType& at, const std::string& member) const {
        for (auto& m : at.members)
            if (m.name == member && !m.params)
                return of(Binding::Kind::Allowlisted, m.return_type);
        return unresolved();   // includes all_members: return type unknown
    }

    Binding allow_method(const AllowType& at, const std::string& member,
                         const std::vector<Binding>& args) const {
        for (auto& m : at.members) {
            if (m.name != member || !m.params || m.params->size() != args.size()) continue;
            bool ok = true;
            for (size_t i = 0; i < args.size(); i++) {
                if (!args[i].resolved() || !args[i].type ||
                    !assignable(*args[i].type, (*m.params)[i])) {
                    ok = false;
                    break;
                }
            }
            if (ok) return of(Binding::Kind::Allowlisted, m.return_type);
        }
        return unresolved();
    }

    bool allow_ctor(const AllowType& at, const std::vector<Binding>& args) const {
        if (at.all_members) {
            for (auto& a : args)
                if (!a.resolved()) return false;
            return true;
        }
        for (auto& m : at.members) {
            if (m.name != "<init>" || !m.params || m.params->size() != args.size()) continue;
            bool ok = true;
            for (size_t i = 0; i < args.size(); i++) {
                if (!args[i].resolved() || !args[i].type ||
                    !assignable(*args[i].type, (*m.params)[i])) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }

    // ---- names ------------------------------------------------------------

    /// A NameRef in base position may denote a value or a type; returns the
    /// binding recorded for the base node.
    Binding classify_base(const Expr& base) {
        if (base.kind == ExprKind::Name) {
            auto& n = static_cast<const NameRef&>(base);
            if (const Type* t = lookup_local(n.name))
                return record(base, of(Binding::Kind::Local, *t));
            if (auto it = table.fields.find(n.name); it != table.fields.end())
                return record(base, of(Binding::Kind::Field, it->second.type));
            if (n.name == table.class_name)
                return record(base, of(Binding::Kind::Local, Type::named(n.name)));
            if (const AllowType* at = table.allowlist.find(n.name))
                return record(base, of(Binding::Kind::Allowlisted, Type::named(at->qualified)));
            return record(base, unresolved());
        }
        return classify(base);
    }

    bool is_own_class_type(const Type& t) const {
        return t.k == Type::K::Named && simple_name(t.name) == table.class_name;
    }

    // ---- main dispatch ----------------------------------------------------

    Binding classify(const Expr& e) {
        switch (e.kind) {
            case ExprKind::BoolLit:
                return record(e, of(Binding::Kind::Local, Type::of(Prim::Boolean)));
            case ExprKind::CharLit:
                return record(e, of(Binding::Kind::Local, Type::of(Prim::Char)));
            case ExprKind::IntLit: {
                auto& n = static_cast<const IntLit&>(e);
                return record(e, of(Binding::Kind::Local,
                                    Type::of(n.is_long ? Prim::Long : Prim::Int)));
            }
            case ExprKind::FloatLit: {
                auto& n = static_cast<const FloatLit&>(e);
                return record(e, of(Binding::Kind::Local,
                                    Type::of(n.is_float ? Prim::Float : Prim::Double)));
            }
            case ExprKind::StringLit:
                return record(e, of(Binding::Kind::Local, Type::named("String")));
            case ExprKind::Name: {
                auto& n = static_cast<const NameRef&>(e);
                if (const Type* t = lookup_local(n.name))
                    return record(e, of(Binding::Kind::Local, *t));
                if (auto it = table.fields.find(n.name); it != table.fields.end())
                    return record(e, of(Binding::Kind::Field, it->second.type));
                return record(e, unresolved());
            }
            case ExprKind::FieldAccess: {
                auto& n = static_cast<const FieldAccessExpr&>(e);
                Binding base = classify_base(*n.base);
                if (!base.resolved() || !base.type) return record(e, unresolved());
                const Type& bt = *base.type;
                if ((bt.k == Type::K::PrimArray || bt.k == Type::K::NamedArray) &&
                    n.member == "length")
                    return record(e, of(Binding::Kind::Local, Type::of(Prim::Int)));
                if (is_own_class_type(bt)) {
                    if (auto it = table.fields.find(n.member); it != table.fields.end())
                        return record(e, of(Binding::Kind::Field, it->second.type));
                    return record(e, unresolved());
                }
                if (bt.k == Type::K::Named) {
                    if (const AllowType* at = table.allowlist.find(bt.name))
                        return record(e, allow_field(*at, n.member));
                }
                return record(e, unresolved());
            }
            case ExprKind::Call: {
                auto& n = static_cast<const CallExpr&>(e);
                std::vector<Binding> args;
                for (auto& a : n.args) args.push_back(classify(*a));

                auto own_method = [&]() -> Binding {
                    auto it = table.methods.find(n.name);
                    if (it == table.methods.end()) return unresolved();
                    const MethodSig& sig = it->second;
                    if (sig.params.size() != args.size()) return unresolved();
                    for (size_t i = 0; i < args.size(); i++)
                        if (!args[i].resolved() || !args[i].type ||
                            !assignable(*args[i].type, sig.params[i]))
                            return unresolved();
                    return of(Binding::Kind::Method, sig.return_type);
                };

                if (!n.base) return record(e, own_method());
                Binding base = classify_base(*n.base);
                if (!base.resolved() || !base.type) return record(e, unresolved());
                const Type& bt = *base.type;
                if (is_own_class_type(bt)) return record(e, own_method());
                if (bt.k == Type::K::Named) {
                    if (const AllowType* at = table.allowlist.find(bt.name))
                        return record(e, allow_method(*at, n.name, args));
                }
                return record(e, unresolved());
            }
            case ExprKind::Unary: {
                auto& n = static_cast<const UnaryExpr&>(e);
                Binding op = classify(*n.operand);
                if (!op.resolved() || !op.type) return record(e, unresolved());
                switch (n.op) {
                    case UnaryExpr::Op::Not:
                        return record(e, is_boolean(*op.type)
                                             ? of(Binding::Kind::Local, *op.type)
                                             : unresolved());
                    case UnaryExpr::Op::BitNot:
                        return record(e, is_integral(*op.type)
                                             ? of(Binding::Kind::Local, promote_unary(*op.type))
                                             : unresolved());
                    case UnaryExpr::Op::Neg:
                    case UnaryExpr::Op::Plus:
                        return record(e, op.type->is_numeric()
                                             ? of(Binding::Kind::Local, promote_unary(*op.type))
                                             : unresolved());
                }
                return record(e, unresolved());
            }
            case ExprKind::Binary: {
                auto& n = static_cast<const BinaryExpr&>(e);
                Binding l = classify(*n.lhs);
                Binding r = classify(*n.rhs);
                if (!l.resolved() || !r.resolved() || !l.type || !r.type)
                    return record(e, unresolved());
                const Type& lt = *l.type;
                const Type& rt = *r.type;
                using Op = BinaryExpr::Op;
                switch (n.op) {
                    case Op::Add:
                        if (lt.k == Type::K::Named && rt.k == Type::K::Named &&
                            simple_name(lt.name) == "String" &&
                            simple_name(rt.name) == "String")
                            return record(e, of(Binding::Kind::Local, Type::named("String")));
                        [[fallthrough]];
                    case Op::Mul: case Op::Div: case Op::Mod: case Op::Sub:
                        if (lt.is_numeric() && rt.is_numeric())
                            return record(e, of(Binding::Kind::Local, promote(lt, rt)));
                        return record(e, unresolved());
                    case Op::Shl: case Op::Shr: case Op::UShr:
                        if (is_integral(lt) && is_integral(rt))
                            return record(e, of(Binding::Kind::Local, promote_unary(lt)));
                        return record(e, unresolved());
                    case Op::Lt: case Op::Le: case Op::Gt: case Op::Ge:
                        if (lt.is_numeric() && rt.is_numeric())
                            return record(e, of(Binding::Kind::Local, Type::of(Prim::Boolean)));
                        return record(e, unresolved());
                    case Op::Eq: case Op::Ne:
                        if ((lt.is_numeric() && rt.is_numeric()) ||
                            (is_boolean(lt) && is_boolean(rt)) ||
                            (lt.k == Type::K::Named && rt.k == Type::K::Named))
                            return record(e, of(Binding::Kind::Local, Type::of(Prim::Boolean)));
                        return record(e, unresolved());
                    case Op::BitAnd: case Op::BitXor: case Op::BitOr:
                        if (is_boolean(lt) && is_boolean(rt))
                            return record(e, of(Binding::Kind::Local, Type::of(Prim::Boolean)));
                        if (is_integral(lt) && is_integral(rt))
                            return record(e, of(Binding::Kind::Local, promote(lt, rt)));
                        return record(e, unresolved());
                    case Op::And: case Op::Or:
                        if (is_boolean(lt) && is_boolean(rt))
                            return record(e, of(Binding::Kind::Local, Type::of(Prim::Boolean)));
                        return record(e, unresolved());
                }
                return record(e, unresolved());
            }
            case ExprKind::Conditional: {
                auto& n = static_cast<const ConditionalExpr&>(e);
                classify(*n.cond);   // recorded; head typing comes from the arms
                Binding t = classify(*n.then_expr);
                Binding f = classify(*n.else_expr);
                if (!t.resolved() || !f.resolved() || !t.type || !f.type)
                    return record(e, unresolved());
                if (*t.type == *f.type)
                    return record(e, of(Binding::Kind::Local, *t.type));
                if (t.type->is_numeric() && f.type->is_numeric())
                    return record(e, of(Binding::Kind::Local, promote(*t.type, *f.type)));
                return record(e, unresolved());
            }
            case ExprKind::Cast: {
                auto& n = static_cast<const CastExpr&>(e);
                classify(*n.operand);
                // target is primitive or primitive array by grammar; the head
                // type is always the target
                return record(e, of(Binding::Kind::Local, n.target));
            }
            case ExprKind::ArrayNew: {
                auto& n = static_cast<const ArrayNewExpr&>(e);
                classify(*n.length);
                return record(e, of(Binding::Kind::Local, Type::array_of(n.elem)));
            }
            case ExprKind::ObjectNew: {
                auto& n = static_cast<const ObjectNewExpr&>(e);
                std::vector<Binding> args;
                for (auto& a : n.args) args.push_back(classify(*a));
                if (simple_name(n.type_name) == table.class_name) {
                    // the subset has no declared constructors; only the
                    // default constructor exists
                    if (args.empty())
                        return record(e, of(Binding::Kind::Method,
                                            Type::named(table.class_name)));
                    return record(e, unresolved());
                }
                if (const AllowType* at = table.allowlist.find(n.type_name)) {
                    if (allow_ctor(*at, args))
                        return record(e, of(Binding::Kind::Allowlisted,
                                            Type::named(at->qualified)));
                }
                return record(e, unresolved());
            }
            case ExprKind::ArrayIndex: {
                auto& n = static_cast<const ArrayIndexExpr&>(e);
                Binding base = classify(*n.base);
                classify(*n.index);
                if (base.resolved() && base.type && base.type->k == Type::K::PrimArray)
                    return record(e, of(Binding::Kind::Local, Type::of(base.type->prim)));
                return record(e, unresolved());
            }
        }
        return record(e, unresolved());
    }

    // ---- statements -------------------------------------------------------

    void walk(const Stmt& s) {
        switch (s.kind) {
            case StmtKind::Block: {
                scopes.emplace_back();
                for (auto& c : static_cast<const BlockStmt&>(s).stmts) walk(*c);
                scopes.pop_back();
                break;
            }
            case StmtKind::VarDecl: {
                auto& n = static_cast<const VarDeclStmt&>(s);
                if (n.init) classify(*n.init);
                scopes.back()[n.name] = n.type;
                break;
            }
            case StmtKind::ExprStmt:
                classify(*static_cast<const ExprStmt&>(s).expr);
                break;
            case StmtKind::Assign: {
                auto& n = static_cast<const AssignStmt&>(s);
                classify(*n.target);
                classify(*n.value);
                break;
            }
            case StmtKind::If: {
                auto& n = static_cast<const IfStmt&>(s);
                classify(*n.cond);
                walk(*n.then_block);
                if (n.else_block) walk(*n.else_block);
                break;
            }
            case StmtKind::While: {
                auto& n = static_cast<const WhileStmt&>(s);
                classify(*n.cond);
                walk(*n.body);
                break;
            }
            case StmtKind::For: {
                auto& n = static_cast<const ForStmt&>(s);
                scopes.emplace_back();
                if (n.init) walk(*n.init);
                if (n.cond) classify(*n.cond);
                if (n.update) walk(*n.update);
                walk(*n.body);
                scopes.pop_back();
                break;
            }
            case StmtKind::Return: {
                auto& n = static_cast<const ReturnStmt&>(s);
                if (n.value) classify(*n.value);
                break;
            }
            case StmtKind::Assert: {
                auto& n = static_cast<const AssertStmt&>(s);
                classify(*n.cond);
                if (n.message) classify(*n.message);
                break;
            }
            case StmtKind::Throw:
                classify(*static_cast<const ThrowStmt&>(s).value);
                break;
        }
    }
};

} // namespace

Classification classify_unit(const Ast& unit, const TypeTable& table) {
    int count = 0;
    for_each_expr(unit, [&](const Expr& e) { count = std::max(count, e.id + 1); });
    Classification out(count);

    Classifier c{table, &out};
    c.scopes.emplace_back();   // field-initializer scope (fields via table)
    for (auto& f : unit.cls.fields)
        if (f.init) c.classify(*f.init);
    for (auto& m : unit.cls.methods) {
        if (!m.body) continue;
        c.scopes.emplace_back();
        for (auto& p : m.params) c.scopes.back()[p.name] = p.type;
        c.walk(*m.body);
        c.scopes.pop_back();
    }
    return out;
}

Binding resolve(const TypeTable& table, const Expr& expr) {
    Classifier c{table, nullptr};
    c.scopes.emplace_back();
    return c.classify(expr);
}

} // namespace argforge
