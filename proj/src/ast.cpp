#include "argforge/ast.hpp"

namespace argforge {

const char* prim_name(Prim p) {
    switch (p) {
        case Prim::Boolean: return "boolean";
        case Prim::Byte: return "byte";
        case Prim::Char: return "char";
        case Prim::Short: return "short";
        case Prim::Int: return "int";
        case Prim::Long: return "long";
        case Prim::Float: return "float";
        case Prim::Double: return "double";
    }
    return "?";
}

std::optional<Prim> prim_from_name(std::string_view name) {
    if (name == "boolean") return Prim::Boolean;
    if (name == "byte") return Prim::Byte;
    if (name == "char") return Prim::Char;
    if (name == "short") return Prim::Short;
    if (name == "int") return Prim::Int;
    if (name == "long") return Prim::Long;
    if (name == "float") return Prim::Float;
    if (name == "double") return Prim::Double;
    return std::nullopt;
}

const std::vector<std::string>& all_prim_names() {
    static const std::vector<std::string> names = {
        "boolean", "byte", "char", "short", "int", "long", "float", "double"};
    return names;
}

bool Type::is_numeric() const {
    return k == K::Primitive && prim != Prim::Boolean;
}

std::string type_to_string(const Type& t) {
    switch (t.k) {
        case Type::K::Void: return "void";
        case Type::K::Primitive: return prim_name(t.prim);
        case Type::K::PrimArray: return std::string(prim_name(t.prim)) + "[]";
        case Type::K::Named: return t.name;
        case Type::K::NamedArray: return t.name + "[]";
    }
    return "?";
}

bool MethodDecl::is_entry() const {
    return name == "main" && params.size() == 1 &&
           params[0].type.k == Type::K::NamedArray &&
           params[0].type.name == "String";
}

// ---------------------------------------------------------------------------
// clone

ExprPtr clone(const Expr& e) {
    ExprPtr out;
    switch (e.kind) {
        case ExprKind::BoolLit:
            out = std::make_unique<BoolLit>(static_cast<const BoolLit&>(e).value);
            break;
        case ExprKind::CharLit:
            out = std::make_unique<CharLit>(static_cast<const CharLit&>(e).value);
            break;
        case ExprKind::IntLit: {
            auto& n = static_cast<const IntLit&>(e);
            out = std::make_unique<IntLit>(n.value, n.is_long);
            break;
        }
        case ExprKind::FloatLit: {
            auto& n = static_cast<const FloatLit&>(e);
            out = std::make_unique<FloatLit>(n.value, n.is_float);
            break;
        }
        case ExprKind::StringLit:
            out = std::make_unique<StringLit>(static_cast<const StringLit&>(e).value);
            break;
        case ExprKind::Name:
            out = std::make_unique<NameRef>(static_cast<const NameRef&>(e).name);
            break;
        case ExprKind::FieldAccess: {
            auto& n = static_cast<const FieldAccessExpr&>(e);
            out = std::make_unique<FieldAccessExpr>(clone(*n.base), n.member);
            break;
        }
        case ExprKind::Call: {
            auto& n = static_cast<const CallExpr&>(e);
            std::vector<ExprPtr> args;
            for (auto& a : n.args) args.push_back(clone(*a));
            out = std::make_unique<CallExpr>(n.base ? clone(*n.base) : nullptr,
                                             n.name, std::move(args));
            break;
        }
        case ExprKind::Unary: {
            auto& n = static_cast<const UnaryExpr&>(e);
            out = std::make_unique<UnaryExpr>(n.op, clone(*n.operand));
            break;
        }
        case ExprKind::Binary: {
            auto& n = static_cast<const BinaryExpr&>(e);
            out = std::make_unique<BinaryExpr>(n.op, clone(*n.lhs), clone(*n.rhs));
            break;
        }
        case ExprKind::Conditional: {
            auto& n = static_cast<const ConditionalExpr&>(e);
            out = std::make_unique<ConditionalExpr>(clone(*n.cond), clone(*n.then_expr),
                                                    clone(*n.else_expr));
            break;
        }
        case ExprKind::Cast: {
            auto& n = static_cast<const CastExpr&>(e);
            out = std::make_unique<CastExpr>(n.target, clone(*n.operand));
            break;
        }
        case ExprKind::ArrayNew: {
            auto& n = static_cast<const ArrayNewExpr&>(e);
            out = std::make_unique<ArrayNewExpr>(n.elem, clone(*n.length));
            break;
        }
        case ExprKind::ObjectNew: {
            auto& n = static_cast<const ObjectNewExpr&>(e);
            std::vector<ExprPtr> args;
            for (auto& a : n.args) args.push_back(clone(*a));
            out = std::make_unique<ObjectNewExpr>(n.type_name, std::move(args));
            break;
        }
        case ExprKind::ArrayIndex: {
            auto& n = static_cast<const ArrayIndexExpr&>(e);
            out = std::make_unique<ArrayIndexExpr>(clone(*n.base), clone(*n.index));
            break;
        }
    }
    out->span = e.span;
    return out;
}

std::unique_ptr<BlockStmt> clone(const BlockStmt& b) {
    auto out = std::make_unique<BlockStmt>();
    out->span = b.span;
    for (auto& s : b.stmts) out->stmts.push_back(clone(*s));
    return out;
}

StmtPtr clone(const Stmt& s) {
    StmtPtr out;
    switch (s.kind) {
        case StmtKind::Block:
            out = clone(static_cast<const BlockStmt&>(s));
            break;
        case StmtKind::VarDecl: {
            auto& n = static_cast<const VarDeclStmt&>(s);
            out = std::make_unique<VarDeclStmt>(n.type, n.name,
                                                n.init ? clone(*n.init) : nullptr);
            break;
        }
        case StmtKind::ExprStmt:
            out = std::make_unique<ExprStmt>(clone(*static_cast<const ExprStmt&>(s).expr));
            break;
        case StmtKind::Assign: {
            auto& n = static_cast<const AssignStmt&>(s);
            out = std::make_unique<AssignStmt>(clone(*n.target), clone(*n.value));
            break;
        }
        case StmtKind::If: {
            auto& n = static_cast<const IfStmt&>(s);
            auto c = std::make_unique<IfStmt>();
            c->cond = clone(*n.cond);
            c->then_block = clone(*n.then_block);
            if (n.else_block) c->else_block = clone(*n.else_block);
            out = std::move(c);
            break;
        }
        case StmtKind::While: {
            auto& n = static_cast<const WhileStmt&>(s);
            auto c = std::make_unique<WhileStmt>();
            c->cond = clone(*n.cond);
            c->body = clone(*n.body);
            out = std::move(c);
            break;
        }
        case StmtKind::For: {
            auto& n = static_cast<const ForStmt&>(s);
            auto c = std::make_unique<ForStmt>();
            if (n.init) c->init = clone(*n.init);
            if (n.cond) c->cond = clone(*n.cond);
            if (n.update) c->update = clone(*n.update);
            c->body = clone(*n.body);
            out = std::move(c);
            break;
        }
        case StmtKind::Return: {
            auto& n = static_cast<const ReturnStmt&>(s);
            out = std::make_unique<ReturnStmt>(n.value ? clone(*n.value) : nullptr);
            break;
        }
        case StmtKind::Assert: {
            auto& n = static_cast<const AssertStmt&>(s);
            out = std::make_unique<AssertStmt>(clone(*n.cond),
                                               n.message ? clone(*n.message) : nullptr);
            break;
        }
        case StmtKind::Throw:
            out = std::make_unique<ThrowStmt>(clone(*static_cast<const ThrowStmt&>(s).value));
            break;
    }
    out->span = s.span;
    return out;
}

Ast clone(const Ast& u) {
    Ast out;
    out.package_name = u.package_name;
    out.imports = u.imports;
    out.header_comment = u.header_comment;
    out.cls.vis = u.cls.vis;
    out.cls.is_final = u.cls.is_final;
    out.cls.name = u.cls.name;
    out.cls.span = u.cls.span;
    for (auto& f : u.cls.fields) {
        FieldDecl fd;
        fd.vis = f.vis;
        fd.is_static = f.is_static;
        fd.is_final = f.is_final;
        fd.type = f.type;
        fd.name = f.name;
        fd.span = f.span;
        if (f.init) fd.init = clone(*f.init);
        out.cls.fields.push_back(std::move(fd));
    }
    for (auto& m : u.cls.methods) {
        MethodDecl md;
        md.vis = m.vis;
        md.is_static = m.is_static;
        md.is_final = m.is_final;
        md.return_type = m.return_type;
        md.name = m.name;
        md.params = m.params;
        md.span = m.span;
        if (m.body) md.body = clone(*m.body);
        out.cls.methods.push_back(std::move(md));
    }
    return out;
}

// ---------------------------------------------------------------------------
// structural equality

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::BoolLit:
            return static_cast<const BoolLit&>(a).value == static_cast<const BoolLit&>(b).value;
        case ExprKind::CharLit:
            return static_cast<const CharLit&>(a).value == static_cast<const CharLit&>(b).value;
        case ExprKind::IntLit: {
            auto& x = static_cast<const IntLit&>(a);
            auto& y = static_cast<const IntLit&>(b);
            return x.value == y.value && x.is_long == y.is_long;
        }
        case ExprKind::FloatLit: {
            auto& x = static_cast<const FloatLit&>(a);
            auto& y = static_cast<const FloatLit&>(b);
            return x.value == y.value && x.is_float == y.is_float;
        }
        case ExprKind::StringLit:
            return static_cast<const StringLit&>(a).value ==
                   static_cast<const StringLit&>(b).value;
        case ExprKind::Name:
            return static_cast<const NameRef&>(a).name == static_cast<const NameRef&>(b).name;
        case ExprKind::FieldAccess: {
            auto& x = static_cast<const FieldAccessExpr&>(a);
            auto& y = static_cast<const FieldAccessExpr&>(b);
            return x.member == y.member && structurally_equal(*x.base, *y.base);
        }
        case ExprKind::Call: {
            auto& x = static_cast<const CallExpr&>(a);
            auto& y = static_cast<const CallExpr&>(b);
            if (x.name != y.name || x.args.size() != y.args.size()) return false;
            if ((x.base == nullptr) != (y.base == nullptr)) return false;
            if (x.base && !structurally_equal(*x.base, *y.base)) return false;
            for (size_t i = 0; i < x.args.size(); i++)
                if (!structurally_equal(*x.args[i], *y.args[i])) return false;
            return true;
        }
        case ExprKind::Unary: {
            auto& x = static_cast<const UnaryExpr&>(a);
            auto& y = static_cast<const UnaryExpr&>(b);
            return x.op == y.op && structurally_equal(*x.operand, *y.operand);
        }
        case ExprKind::Binary: {
            auto& x = static_cast<const BinaryExpr&>(a);
            auto& y = static_cast<const BinaryExpr&>(b);
            return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                   structurally_equal(*x.rhs, *y.rhs);
        }
        case ExprKind::Conditional: {
            auto& x = static_cast<const ConditionalExpr&>(a);
            auto& y = static_cast<const ConditionalExpr&>(b);
            return structurally_equal(*x.cond, *y.cond) &&
                   structurally_equal(*x.then_expr, *y.then_expr) &&
                   structurally_equal(*x.else_expr, *y.else_expr);
        }
        case ExprKind::Cast: {
            auto& x = static_cast<const CastExpr&>(a);
            auto& y = static_cast<const CastExpr&>(b);
            return x.target == y.target && structurally_equal(*x.operand, *y.operand);
        }
        case ExprKind::ArrayNew: {
            auto& x = static_cast<const ArrayNewExpr&>(a);
            auto& y = static_cast<const ArrayNewExpr&>(b);
            return x.elem == y.elem && structurally_equal(*x.length, *y.length);
        }
        case ExprKind::ObjectNew: {
            auto& x = static_cast<const ObjectNewExpr&>(a);
            auto& y = static_cast<const ObjectNewExpr&>(b);
            if (x.type_name != y.type_name || x.args.size() != y.args.size()) return false;
            for (size_t i = 0; i < x.args.size(); i++)
                if (!structurally_equal(*x.args[i], *y.args[i])) return false;
            return true;
        }
        case ExprKind::ArrayIndex: {
            auto& x = static_cast<const ArrayIndexExpr&>(a);
            auto& y = static_cast<const ArrayIndexExpr&>(b);
            return structurally_equal(*x.base, *y.base) &&
                   structurally_equal(*x.index, *y.index);
        }
    }
    return false;
}

namespace {
bool eq_opt(const Expr* a, const Expr* b) {
    if ((a == nullptr) != (b == nullptr)) return false;
    return a == nullptr || structurally_equal(*a, *b);
}
bool eq_opt(const Stmt* a, const Stmt* b) {
    if ((a == nullptr) != (b == nullptr)) return false;
    return a == nullptr || structurally_equal(*a, *b);
}
} // namespace

bool structurally_equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case StmtKind::Block: {
            auto& x = static_cast<const BlockStmt&>(a);
            auto& y = static_cast<const BlockStmt&>(b);
            if (x.stmts.size() != y.stmts.size()) return false;
            for (size_t i = 0; i < x.stmts.size(); i++)
                if (!structurally_equal(*x.stmts[i], *y.stmts[i])) return false;
            return true;
        }
        case StmtKind::VarDecl: {
            auto& x = static_cast<const VarDeclStmt&>(a);
            auto& y = static_cast<const VarDeclStmt&>(b);
            return x.type == y.type && x.name == y.name && eq_opt(x.init.get(), y.init.get());
        }
        case StmtKind::ExprStmt:
            return structurally_equal(*static_cast<const ExprStmt&>(a).expr,
                                      *static_cast<const ExprStmt&>(b).expr);
        case StmtKind::Assign: {
            auto& x = static_cast<const AssignStmt&>(a);
            auto& y = static_cast<const AssignStmt&>(b);
            return structurally_equal(*x.target, *y.target) &&
                   structurally_equal(*x.value, *y.value);
        }
        case StmtKind::If: {
            auto& x = static_cast<const IfStmt&>(a);
            auto& y = static_cast<const IfStmt&>(b);
            return structurally_equal(*x.cond, *y.cond) &&
                   structurally_equal(*x.then_block, *y.then_block) &&
                   eq_opt(x.else_block.get(), y.else_block.get());
        }
        case StmtKind::While: {
            auto& x = static_cast<const WhileStmt&>(a);
            auto& y = static_cast<const WhileStmt&>(b);
            return structurally_equal(*x.cond, *y.cond) &&
                   structurally_equal(*x.body, *y.body);
        }
        case StmtKind::For: {
            auto& x = static_cast<const ForStmt&>(a);
            auto& y = static_cast<const ForStmt&>(b);
            return eq_opt(x.init.get(), y.init.get()) && eq_opt(x.cond.get(), y.cond.get()) &&
                   eq_opt(x.update.get(), y.update.get()) &&
                   structurally_equal(*x.body, *y.body);
        }
        case StmtKind::Return:
            return eq_opt(static_cast<const ReturnStmt&>(a).value.get(),
                          static_cast<const ReturnStmt&>(b).value.get());
        case StmtKind::Assert: {
            auto& x = static_cast<const AssertStmt&>(a);
            auto& y = static_cast<const AssertStmt&>(b);
            return structurally_equal(*x.cond, *y.cond) &&
                   eq_opt(x.message.get(), y.message.get());
        }
        case StmtKind::Throw:
            return structurally_equal(*static_cast<const ThrowStmt&>(a).value,
                                      *static_cast<const ThrowStmt&>(b).value);
    }
    return false;
}

bool structurally_equal(const Ast& a, const Ast& b) {
    if (a.package_name != b.package_name || a.imports != b.imports) return false;
    const ClassDecl& x = a.cls;
    const ClassDecl& y = b.cls;
    if (x.vis != y.vis || x.is_final != y.is_final || x.name != y.name) return false;
    if (x.fields.size() != y.fields.size() || x.methods.size() != y.methods.size())
        return false;
    for (size_t i = 0; i < x.fields.size(); i++) {
        auto& f = x.fields[i];
        auto& g = y.fields[i];
        if (f.vis != g.vis || f.is_static != g.is_static || f.is_final != g.is_final ||
            f.type != g.type || f.name != g.name || !eq_opt(f.init.get(), g.init.get()))
            return false;
    }
    for (size_t i = 0; i < x.methods.size(); i++) {
        auto& m = x.methods[i];
        auto& n = y.methods[i];
        if (m.vis != n.vis || m.is_static != n.is_static || m.is_final != n.is_final ||
            m.return_type != n.return_type || m.name != n.name ||
            m.params.size() != n.params.size())
            return false;
        for (size_t j = 0; j < m.params.size(); j++)
            if (m.params[j].type != n.params[j].type || m.params[j].name != n.params[j].name)
                return false;
        if ((m.body == nullptr) != (n.body == nullptr)) return false;
        if (m.body && !structurally_equal(*m.body, *n.body)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// traversal and numbering

namespace {

void walk_expr(Expr& e, const std::function<void(Expr&)>& f) {
    f(e);
    switch (e.kind) {
        case ExprKind::FieldAccess:
            walk_expr(*static_cast<FieldAccessExpr&>(e).base, f);
            break;
        case ExprKind::Call: {
            auto& n = static_cast<CallExpr&>(e);
            if (n.base) walk_expr(*n.base, f);
            for (auto& a : n.args) walk_expr(*a, f);
            break;
        }
        case ExprKind::Unary:
            walk_expr(*static_cast<UnaryExpr&>(e).operand, f);
            break;
        case ExprKind::Binary: {
            auto& n = static_cast<BinaryExpr&>(e);
            walk_expr(*n.lhs, f);
            walk_expr(*n.rhs, f);
            break;
        }
        case ExprKind::Conditional: {
            auto& n = static_cast<ConditionalExpr&>(e);
            walk_expr(*n.cond, f);
            walk_expr(*n.then_expr, f);
            walk_expr(*n.else_expr, f);
            break;
        }
        case ExprKind::Cast:
            walk_expr(*static_cast<CastExpr&>(e).operand, f);
            break;
        case ExprKind::ArrayNew:
            walk_expr(*static_cast<ArrayNewExpr&>(e).length, f);
            break;
        case ExprKind::ObjectNew:
            for (auto& a : static_cast<ObjectNewExpr&>(e).args) walk_expr(*a, f);
            break;
        case ExprKind::ArrayIndex: {
            auto& n = static_cast<ArrayIndexExpr&>(e);
            walk_expr(*n.base, f);
            walk_expr(*n.index, f);
            break;
        }
        default:
            break;
    }
}

void walk_stmt(Stmt& s, const std::function<void(Expr&)>& f) {
    switch (s.kind) {
        case StmtKind::Block:
            for (auto& c : static_cast<BlockStmt&>(s).stmts) walk_stmt(*c, f);
            break;
        case StmtKind::VarDecl: {
            auto& n = static_cast<VarDeclStmt&>(s);
            if (n.init) walk_expr(*n.init, f);
            break;
        }
        case StmtKind::ExprStmt:
            walk_expr(*static_cast<ExprStmt&>(s).expr, f);
            break;
        case StmtKind::Assign: {
            auto& n = static_cast<AssignStmt&>(s);
            walk_expr(*n.target, f);
            walk_expr(*n.value, f);
            break;
        }
        case StmtKind::If: {
            auto& n = static_cast<IfStmt&>(s);
            walk_expr(*n.cond, f);
            walk_stmt(*n.then_block, f);
            if (n.else_block) walk_stmt(*n.else_block, f);
            break;
        }
        case StmtKind::While: {
            auto& n = static_cast<WhileStmt&>(s);
            walk_expr(*n.cond, f);
            walk_stmt(*n.body, f);
            break;
        }
        case StmtKind::For: {
            auto& n = static_cast<ForStmt&>(s);
            if (n.init) walk_stmt(*n.init, f);
            if (n.cond) walk_expr(*n.cond, f);
            if (n.update) walk_stmt(*n.update, f);
            walk_stmt(*n.body, f);
            break;
        }
        case StmtKind::Return: {
            auto& n = static_cast<ReturnStmt&>(s);
            if (n.value) walk_expr(*n.value, f);
            break;
        }
        case StmtKind::Assert: {
            auto& n = static_cast<AssertStmt&>(s);
            walk_expr(*n.cond, f);
            if (n.message) walk_expr(*n.message, f);
            break;
        }
        case StmtKind::Throw:
            walk_expr(*static_cast<ThrowStmt&>(s).value, f);
            break;
    }
}

void walk_unit(Ast& unit, const std::function<void(Expr&)>& f) {
    for (auto& fd : unit.cls.fields)
        if (fd.init) walk_expr(*fd.init, f);
    for (auto& m : unit.cls.methods)
        if (m.body) walk_stmt(*m.body, f);
}

} // namespace

int assign_ids(Ast& unit) {
    int next = 0;
    walk_unit(unit, [&](Expr& e) { e.id = next++; });
    return next;
}

void for_each_expr(const Ast& unit, const std::function<void(const Expr&)>& f) {
    walk_unit(const_cast<Ast&>(unit), [&](Expr& e) { f(e); });
}

void for_each_expr(const Expr& e, const std::function<void(const Expr&)>& f) {
    walk_expr(const_cast<Expr&>(e), [&](Expr& x) { f(x); });
}

} // namespace argforge
