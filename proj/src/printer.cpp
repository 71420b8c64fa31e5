#include "argforge/printer.hpp"

#include <charconv>
#include <sstream>

namespace argforge {

namespace {

constexpr int kIndentWidth = 4;

std::string indent(int depth) { return std::string(depth * kIndentWidth, ' '); }

int binop_prec(BinaryExpr::Op op) {
    using Op = BinaryExpr::Op;
    switch (op) {
        case Op::Mul: case Op::Div: case Op::Mod: return 10;
        case Op::Add: case Op::Sub: return 9;
        case Op::Shl: case Op::Shr: case Op::UShr: return 8;
        case Op::Lt: case Op::Le: case Op::Gt: case Op::Ge: return 7;
        case Op::Eq: case Op::Ne: return 6;
        case Op::BitAnd: return 5;
        case Op::BitXor: return 4;
        case Op::BitOr: return 3;
        case Op::And: return 2;
        case Op::Or: return 1;
    }
    return 0;
}

const char* binop_text(BinaryExpr::Op op) {
    using Op = BinaryExpr::Op;
    switch (op) {
        case Op::Mul: return "*";   case Op::Div: return "/";
        case Op::Mod: return "%";   case Op::Add: return "+";
        case Op::Sub: return "-";   case Op::Shl: return "<<";
        case Op::Shr: return ">>";  case Op::UShr: return ">>>";
        case Op::Lt: return "<";    case Op::Le: return "<=";
        case Op::Gt: return ">";    case Op::Ge: return ">=";
        case Op::Eq: return "==";   case Op::Ne: return "!=";
        case Op::BitAnd: return "&"; case Op::BitXor: return "^";
        case Op::BitOr: return "|"; case Op::And: return "&&";
        case Op::Or: return "||";
    }
    return "?";
}

int expr_prec(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Binary: return binop_prec(static_cast<const BinaryExpr&>(e).op);
        case ExprKind::Conditional: return 0;
        case ExprKind::Unary:
        case ExprKind::Cast: return 11;
        default: return 12;
    }
}

std::string escape_char(uint32_t c) {
    switch (c) {
        case '\n': return "\\n";
        case '\t': return "\\t";
        case '\r': return "\\r";
        case '\b': return "\\b";
        case '\f': return "\\f";
        case '\0': return "\\0";
        case '\\': return "\\\\";
        case '\'': return "\\'";
        default: return std::string(1, (char)c);
    }
}

std::string escape_string(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\0': out += "\\0"; break;
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string format_float(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos)
        s += ".0";
    return s;
}

void print_expr_rec(std::string& out, const Expr& e);

void print_child(std::string& out, const Expr& child, int parent_prec, bool tight) {
    // `tight` demands strictly higher precedence (right operands of
    // left-associative operators, unary operands)
    int p = expr_prec(child);
    bool parens = tight ? p <= parent_prec : p < parent_prec;
    if (parens) out += "(";
    print_expr_rec(out, child);
    if (parens) out += ")";
}

void print_expr_rec(std::string& out, const Expr& e) {
    switch (e.kind) {
        case ExprKind::BoolLit:
            out += static_cast<const BoolLit&>(e).value ? "true" : "false";
            break;
        case ExprKind::CharLit:
            out += "'" + escape_char(static_cast<const CharLit&>(e).value) + "'";
            break;
        case ExprKind::IntLit: {
            auto& n = static_cast<const IntLit&>(e);
            out += std::to_string(n.value);
            if (n.is_long) out += "L";
            break;
        }
        case ExprKind::FloatLit: {
            auto& n = static_cast<const FloatLit&>(e);
            out += format_float(n.value);
            if (n.is_float) out += "f";
            break;
        }
        case ExprKind::StringLit:
            out += "\"" + escape_string(static_cast<const StringLit&>(e).value) + "\"";
            break;
        case ExprKind::Name:
            out += static_cast<const NameRef&>(e).name;
            break;
        case ExprKind::FieldAccess: {
            auto& n = static_cast<const FieldAccessExpr&>(e);
            print_child(out, *n.base, 12, false);
            out += "." + n.member;
            break;
        }
        case ExprKind::Call: {
            auto& n = static_cast<const CallExpr&>(e);
            if (n.base) {
                print_child(out, *n.base, 12, false);
                out += ".";
            }
            out += n.name + "(";
            for (size_t i = 0; i < n.args.size(); i++) {
                if (i) out += ", ";
                print_expr_rec(out, *n.args[i]);
            }
            out += ")";
            break;
        }
        case ExprKind::Unary: {
            auto& n = static_cast<const UnaryExpr&>(e);
            const char* sym = "";
            switch (n.op) {
                case UnaryExpr::Op::Neg: sym = "-"; break;
                case UnaryExpr::Op::Plus: sym = "+"; break;
                case UnaryExpr::Op::Not: sym = "!"; break;
                case UnaryExpr::Op::BitNot: sym = "~"; break;
            }
            out += sym;
            // parenthesize a signed operand of a sign operator so the
            // output never lexes as -- or ++
            bool sign_clash = false;
            if (n.operand->kind == ExprKind::Unary) {
                auto inner = static_cast<const UnaryExpr&>(*n.operand).op;
                bool outer_sign = n.op == UnaryExpr::Op::Neg || n.op == UnaryExpr::Op::Plus;
                bool inner_sign =
                    inner == UnaryExpr::Op::Neg || inner == UnaryExpr::Op::Plus;
                sign_clash = outer_sign && inner_sign;
            }
            if (sign_clash) {
                out += "(";
                print_expr_rec(out, *n.operand);
                out += ")";
            } else {
                print_child(out, *n.operand, 11, false);
            }
            break;
        }
        case ExprKind::Binary: {
            auto& n = static_cast<const BinaryExpr&>(e);
            int p = binop_prec(n.op);
            print_child(out, *n.lhs, p, false);
            out += std::string(" ") + binop_text(n.op) + " ";
            print_child(out, *n.rhs, p, true);
            break;
        }
        case ExprKind::Conditional: {
            auto& n = static_cast<const ConditionalExpr&>(e);
            print_child(out, *n.cond, 1, false);
            out += " ? ";
            print_expr_rec(out, *n.then_expr);
            out += " : ";
            print_expr_rec(out, *n.else_expr);
            break;
        }
        case ExprKind::Cast: {
            auto& n = static_cast<const CastExpr&>(e);
            out += "(" + print_type(n.target) + ") ";
            print_child(out, *n.operand, 11, false);
            break;
        }
        case ExprKind::ArrayNew: {
            auto& n = static_cast<const ArrayNewExpr&>(e);
            out += std::string("new ") + prim_name(n.elem) + "[";
            print_expr_rec(out, *n.length);
            out += "]";
            break;
        }
        case ExprKind::ObjectNew: {
            auto& n = static_cast<const ObjectNewExpr&>(e);
            out += "new " + n.type_name + "(";
            for (size_t i = 0; i < n.args.size(); i++) {
                if (i) out += ", ";
                print_expr_rec(out, *n.args[i]);
            }
            out += ")";
            break;
        }
        case ExprKind::ArrayIndex: {
            auto& n = static_cast<const ArrayIndexExpr&>(e);
            print_child(out, *n.base, 12, false);
            out += "[";
            print_expr_rec(out, *n.index);
            out += "]";
            break;
        }
    }
}

// statement head without trailing ';' (for-loop slots)
std::string print_inline_stmt(const Stmt& s) {
    std::string out;
    switch (s.kind) {
        case StmtKind::VarDecl: {
            auto& n = static_cast<const VarDeclStmt&>(s);
            out += print_type(n.type) + " " + n.name;
            if (n.init) {
                out += " = ";
                print_expr_rec(out, *n.init);
            }
            break;
        }
        case StmtKind::Assign: {
            auto& n = static_cast<const AssignStmt&>(s);
            print_expr_rec(out, *n.target);
            out += " = ";
            print_expr_rec(out, *n.value);
            break;
        }
        case StmtKind::ExprStmt:
            print_expr_rec(out, *static_cast<const ExprStmt&>(s).expr);
            break;
        default:
            break;
    }
    return out;
}

void print_block_body(std::string& out, const BlockStmt& b, int depth);

void print_stmt(std::string& out, const Stmt& s, int depth) {
    std::string ind = indent(depth);
    switch (s.kind) {
        case StmtKind::Block: {
            out += ind + "{\n";
            print_block_body(out, static_cast<const BlockStmt&>(s), depth + 1);
            out += ind + "}\n";
            break;
        }
        case StmtKind::VarDecl:
        case StmtKind::Assign:
            out += ind + print_inline_stmt(s) + ";\n";
            break;
        case StmtKind::ExprStmt:
            out += ind + print_inline_stmt(s) + ";\n";
            break;
        case StmtKind::If: {
            auto& n = static_cast<const IfStmt&>(s);
            out += ind + "if (";
            print_expr_rec(out, *n.cond);
            out += ") {\n";
            print_block_body(out, *n.then_block, depth + 1);
            const IfStmt* cur = &n;
            while (cur->else_block) {
                // `else if` chain when the else block holds a single if
                if (cur->else_block->stmts.size() == 1 &&
                    cur->else_block->stmts[0]->kind == StmtKind::If) {
                    auto& next = static_cast<const IfStmt&>(*cur->else_block->stmts[0]);
                    out += ind + "} else if (";
                    print_expr_rec(out, *next.cond);
                    out += ") {\n";
                    print_block_body(out, *next.then_block, depth + 1);
                    cur = &next;
                } else {
                    out += ind + "} else {\n";
                    print_block_body(out, *cur->else_block, depth + 1);
                    break;
                }
            }
            out += ind + "}\n";
            break;
        }
        case StmtKind::While: {
            auto& n = static_cast<const WhileStmt&>(s);
            out += ind + "while (";
            print_expr_rec(out, *n.cond);
            out += ") {\n";
            print_block_body(out, *n.body, depth + 1);
            out += ind + "}\n";
            break;
        }
        case StmtKind::For: {
            auto& n = static_cast<const ForStmt&>(s);
            out += ind + "for (";
            if (n.init) out += print_inline_stmt(*n.init);
            out += "; ";
            if (n.cond) print_expr_rec(out, *n.cond);
            out += "; ";
            if (n.update) out += print_inline_stmt(*n.update);
            out += ") {\n";
            print_block_body(out, *n.body, depth + 1);
            out += ind + "}\n";
            break;
        }
        case StmtKind::Return: {
            auto& n = static_cast<const ReturnStmt&>(s);
            out += ind + "return";
            if (n.value) {
                out += " ";
                print_expr_rec(out, *n.value);
            }
            out += ";\n";
            break;
        }
        case StmtKind::Assert: {
            auto& n = static_cast<const AssertStmt&>(s);
            out += ind + "assert ";
            print_expr_rec(out, *n.cond);
            if (n.message) {
                out += " : ";
                print_expr_rec(out, *n.message);
            }
            out += ";\n";
            break;
        }
        case StmtKind::Throw: {
            auto& n = static_cast<const ThrowStmt&>(s);
            out += ind + "throw ";
            print_expr_rec(out, *n.value);
            out += ";\n";
            break;
        }
    }
}

void print_block_body(std::string& out, const BlockStmt& b, int depth) {
    for (auto& s : b.stmts) print_stmt(out, *s, depth);
}

std::string mods_text(Visibility vis, bool is_static, bool is_final) {
    std::string out;
    switch (vis) {
        case Visibility::Public: out += "public "; break;
        case Visibility::Private: out += "private "; break;
        case Visibility::Protected: out += "protected "; break;
        case Visibility::None: break;
    }
    if (is_static) out += "static ";
    if (is_final) out += "final ";
    return out;
}

} // namespace

std::string print_type(const Type& t) { return type_to_string(t); }

std::string print_expr(const Expr& e) {
    std::string out;
    print_expr_rec(out, e);
    return out;
}

std::string pretty_print(const Ast& unit) {
    std::string out;
    if (unit.package_name) out += "package " + *unit.package_name + ";\n\n";
    for (auto& imp : unit.imports) out += "import " + imp + ";\n";
    if (!unit.imports.empty()) out += "\n";
    for (auto& line : unit.header_comment) out += "// " + line + "\n";

    const ClassDecl& cls = unit.cls;
    out += mods_text(cls.vis, false, cls.is_final) + "class " + cls.name + " {\n";
    for (auto& f : cls.fields) {
        out += indent(1) + mods_text(f.vis, f.is_static, f.is_final) +
               print_type(f.type) + " " + f.name;
        if (f.init) {
            out += " = ";
            print_expr_rec(out, *f.init);
        }
        out += ";\n";
    }
    for (auto& m : cls.methods) {
        out += "\n";
        out += indent(1) + mods_text(m.vis, m.is_static, m.is_final);
        out += print_type(m.return_type) + " " + m.name + "(";
        for (size_t i = 0; i < m.params.size(); i++) {
            if (i) out += ", ";
            out += print_type(m.params[i].type) + " " + m.params[i].name;
        }
        out += ") {\n";
        if (m.body) print_block_body(out, *m.body, 2);
        out += indent(1) + "}\n";
    }
    out += "}\n";
    return out;
}

} // namespace argforge
