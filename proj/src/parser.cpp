#include "argforge/parser.hpp"

namespace argforge {

namespace {

struct Parser {
    const std::vector<Token>& toks;
    size_t pos = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos + ahead;
        return i < toks.size() ? toks[i] : toks.back();
    }
    const Token& advance() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw CompileError("PARSE_FAIL", t.span, msg + " at " + to_string(t.span));
    }

    bool at_kw(std::string_view kw) const {
        return peek().kind == TokKind::Keyword && peek().text == kw;
    }
    bool at_punct(std::string_view p) const {
        return peek().kind == TokKind::Punct && peek().text == p;
    }
    bool eat_kw(std::string_view kw) {
        if (!at_kw(kw)) return false;
        advance();
        return true;
    }
    bool eat_punct(std::string_view p) {
        if (!at_punct(p)) return false;
        advance();
        return true;
    }
    void expect_punct(std::string_view p) {
        if (!eat_punct(p)) fail(std::string("expected '") + std::string(p) + "'");
    }
    std::string expect_ident() {
        if (peek().kind != TokKind::Ident) fail("expected identifier");
        return advance().text;
    }

    SourceSpan span_from(const SourceSpan& start) const {
        SourceSpan s = start;
        const SourceSpan& prev = toks[pos > 0 ? pos - 1 : 0].span;
        s.end_line = prev.end_line;
        s.end_col = prev.end_col;
        return s;
    }

    // qualified name: Ident (. Ident)*, with optional trailing .*
    std::string parse_qualified_name(bool allow_star) {
        std::string name = expect_ident();
        while (at_punct(".")) {
            if (allow_star && peek(1).kind == TokKind::Punct && peek(1).text == "*") {
                advance();
                advance();
                name += ".*";
                break;
            }
            if (peek(1).kind != TokKind::Ident) break;
            advance();
            name += "." + expect_ident();
        }
        return name;
    }

    bool at_primitive_type() const {
        return peek().kind == TokKind::Keyword && prim_from_name(peek().text).has_value();
    }

    // type already known to start here
    Type parse_type() {
        if (at_primitive_type()) {
            Prim p = *prim_from_name(advance().text);
            if (at_punct("[")) {
                advance();
                expect_punct("]");
                if (at_punct("[")) fail("multi-dimensional arrays are outside the subset");
                return Type::array_of(p);
            }
            return Type::of(p);
        }
        if (peek().kind == TokKind::Ident) {
            std::string name = parse_qualified_name(false);
            if (at_punct("<")) fail("generic types are outside the subset");
            if (at_punct("[")) {
                advance();
                expect_punct("]");
                if (at_punct("[")) fail("multi-dimensional arrays are outside the subset");
                return Type::named_array(name);
            }
            return Type::named(name);
        }
        fail("expected type");
    }

    // ---- expressions ------------------------------------------------------

    std::vector<ExprPtr> parse_args() {
        expect_punct("(");
        std::vector<ExprPtr> args;
        if (!at_punct(")")) {
            args.push_back(parse_expr());
            while (eat_punct(",")) args.push_back(parse_expr());
        }
        expect_punct(")");
        return args;
    }

    ExprPtr parse_primary() {
        SourceSpan start = peek().span;
        ExprPtr e;
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::IntLit:
            case TokKind::LongLit:
                e = std::make_unique<IntLit>(t.int_value, t.kind == TokKind::LongLit);
                advance();
                break;
            case TokKind::FloatLit:
            case TokKind::DoubleLit:
                e = std::make_unique<FloatLit>(t.float_value, t.kind == TokKind::FloatLit);
                advance();
                break;
            case TokKind::CharLit:
                e = std::make_unique<CharLit>(t.char_value);
                advance();
                break;
            case TokKind::StringLit:
                e = std::make_unique<StringLit>(t.string_value);
                advance();
                break;
            case TokKind::Keyword:
                if (t.text == "true" || t.text == "false") {
                    e = std::make_unique<BoolLit>(t.text == "true");
                    advance();
                } else if (t.text == "new") {
                    advance();
                    if (at_primitive_type()) {
                        Prim p = *prim_from_name(advance().text);
                        expect_punct("[");
                        ExprPtr len = parse_expr();
                        expect_punct("]");
                        if (at_punct("[")) fail("multi-dimensional arrays are outside the subset");
                        e = std::make_unique<ArrayNewExpr>(p, std::move(len));
                    } else {
                        std::string name = parse_qualified_name(false);
                        if (at_punct("[")) fail("reference arrays are outside the subset");
                        auto args = parse_args();
                        e = std::make_unique<ObjectNewExpr>(name, std::move(args));
                    }
                } else {
                    fail("keyword '" + t.text + "' is outside the subset");
                }
                break;
            case TokKind::Ident: {
                std::string name = advance().text;
                if (at_punct("(")) {
                    auto args = parse_args();
                    e = std::make_unique<CallExpr>(nullptr, name, std::move(args));
                } else {
                    e = std::make_unique<NameRef>(name);
                }
                break;
            }
            case TokKind::Punct:
                if (t.text == "(") {
                    advance();
                    e = parse_expr();   // parenthesized; node dropped
                    expect_punct(")");
                } else {
                    fail("expected expression");
                }
                break;
            default:
                fail("expected expression");
        }

        // postfix: field access, qualified call, array index
        while (true) {
            if (at_punct(".")) {
                advance();
                std::string member = expect_ident();
                if (at_punct("(")) {
                    auto args = parse_args();
                    e = std::make_unique<CallExpr>(std::move(e), member, std::move(args));
                } else {
                    e = std::make_unique<FieldAccessExpr>(std::move(e), member);
                }
            } else if (at_punct("[")) {
                advance();
                ExprPtr idx = parse_expr();
                expect_punct("]");
                e = std::make_unique<ArrayIndexExpr>(std::move(e), std::move(idx));
            } else {
                break;
            }
            e->span = span_from(start);
        }
        if (e->span == SourceSpan{}) e->span = span_from(start);
        return e;
    }

    ExprPtr parse_unary() {
        SourceSpan start = peek().span;
        // cast: '(' primitive-type [ '[]' ] ')' unary
        if (at_punct("(") && peek(1).kind == TokKind::Keyword &&
            prim_from_name(peek(1).text).has_value()) {
            advance();
            Type target = parse_type();
            expect_punct(")");
            ExprPtr e = std::make_unique<CastExpr>(target, parse_unary());
            e->span = span_from(start);
            return e;
        }
        UnaryExpr::Op op;
        if (at_punct("-")) op = UnaryExpr::Op::Neg;
        else if (at_punct("+")) op = UnaryExpr::Op::Plus;
        else if (at_punct("!")) op = UnaryExpr::Op::Not;
        else if (at_punct("~")) op = UnaryExpr::Op::BitNot;
        else return parse_primary();
        advance();
        ExprPtr e = std::make_unique<UnaryExpr>(op, parse_unary());
        e->span = span_from(start);
        return e;
    }

    struct BinOpInfo {
        const char* text;
        BinaryExpr::Op op;
        int prec;
    };

    static const BinOpInfo* binop_at(const Token& t) {
        static const BinOpInfo ops[] = {
            {"*", BinaryExpr::Op::Mul, 10},   {"/", BinaryExpr::Op::Div, 10},
            {"%", BinaryExpr::Op::Mod, 10},   {"+", BinaryExpr::Op::Add, 9},
            {"-", BinaryExpr::Op::Sub, 9},    {"<<", BinaryExpr::Op::Shl, 8},
            {">>", BinaryExpr::Op::Shr, 8},   {">>>", BinaryExpr::Op::UShr, 8},
            {"<", BinaryExpr::Op::Lt, 7},     {"<=", BinaryExpr::Op::Le, 7},
            {">", BinaryExpr::Op::Gt, 7},     {">=", BinaryExpr::Op::Ge, 7},
            {"==", BinaryExpr::Op::Eq, 6},    {"!=", BinaryExpr::Op::Ne, 6},
            {"&", BinaryExpr::Op::BitAnd, 5}, {"^", BinaryExpr::Op::BitXor, 4},
            {"|", BinaryExpr::Op::BitOr, 3},  {"&&", BinaryExpr::Op::And, 2},
            {"||", BinaryExpr::Op::Or, 1},
        };
        if (t.kind != TokKind::Punct) return nullptr;
        for (const auto& o : ops)
            if (t.text == o.text) return &o;
        return nullptr;
    }

    ExprPtr parse_binary(int min_prec) {
        SourceSpan start = peek().span;
        ExprPtr lhs = parse_unary();
        while (true) {
            const BinOpInfo* info = binop_at(peek());
            if (!info || info->prec < min_prec) break;
            advance();
            ExprPtr rhs = parse_binary(info->prec + 1);
            lhs = std::make_unique<BinaryExpr>(info->op, std::move(lhs), std::move(rhs));
            lhs->span = span_from(start);
        }
        return lhs;
    }

    ExprPtr parse_expr() {
        SourceSpan start = peek().span;
        ExprPtr cond = parse_binary(1);
        if (at_punct("?")) {
            advance();
            ExprPtr then_e = parse_expr();
            expect_punct(":");
            ExprPtr else_e = parse_expr();
            auto e = std::make_unique<ConditionalExpr>(std::move(cond), std::move(then_e),
                                                       std::move(else_e));
            e->span = span_from(start);
            return e;
        }
        return cond;
    }

    // ---- statements -------------------------------------------------------

    bool at_local_decl() const {
        if (at_primitive_type()) return true;
        // Ident [ '[]' ] Ident  — a named-type declaration
        if (peek().kind == TokKind::Ident) {
            size_t i = 1;
            while (peek(i).kind == TokKind::Punct && peek(i).text == "." &&
                   peek(i + 1).kind == TokKind::Ident)
                i += 2;
            if (peek(i).kind == TokKind::Punct && peek(i).text == "[" &&
                peek(i + 1).kind == TokKind::Punct && peek(i + 1).text == "]")
                i += 2;
            return peek(i).kind == TokKind::Ident;
        }
        return false;
    }

    // assignment or expression, without trailing ';'
    StmtPtr parse_simple_stmt() {
        SourceSpan start = peek().span;
        ExprPtr e = parse_expr();
        if (at_punct("=")) {
            if (e->kind != ExprKind::Name && e->kind != ExprKind::FieldAccess &&
                e->kind != ExprKind::ArrayIndex)
                fail("invalid assignment target");
            advance();
            ExprPtr v = parse_expr();
            auto s = std::make_unique<AssignStmt>(std::move(e), std::move(v));
            s->span = span_from(start);
            return s;
        }
        if (at_punct("+=") || at_punct("-=") || at_punct("*=") || at_punct("/="))
            fail("compound assignment is outside the subset");
        auto s = std::make_unique<ExprStmt>(std::move(e));
        s->span = span_from(start);
        return s;
    }

    StmtPtr parse_var_decl() {
        SourceSpan start = peek().span;
        Type t = parse_type();
        std::string name = expect_ident();
        ExprPtr init;
        if (eat_punct("=")) init = parse_expr();
        if (at_punct(",")) fail("multiple declarators are outside the subset");
        auto s = std::make_unique<VarDeclStmt>(t, std::move(name), std::move(init));
        s->span = span_from(start);
        return s;
    }

    std::unique_ptr<BlockStmt> parse_block() {
        SourceSpan start = peek().span;
        expect_punct("{");
        auto b = std::make_unique<BlockStmt>();
        while (!at_punct("}")) {
            if (peek().kind == TokKind::Eof) fail("unterminated block");
            b->stmts.push_back(parse_stmt());
        }
        advance();
        b->span = span_from(start);
        return b;
    }

    // any statement body normalized to a block
    std::unique_ptr<BlockStmt> parse_body() {
        if (at_punct("{")) return parse_block();
        auto b = std::make_unique<BlockStmt>();
        SourceSpan start = peek().span;
        b->stmts.push_back(parse_stmt());
        b->span = span_from(start);
        return b;
    }

    StmtPtr parse_stmt() {
        SourceSpan start = peek().span;
        if (at_punct("{")) return parse_block();
        if (at_kw("if")) {
            advance();
            auto s = std::make_unique<IfStmt>();
            expect_punct("(");
            s->cond = parse_expr();
            expect_punct(")");
            s->then_block = parse_body();
            if (eat_kw("else")) s->else_block = parse_body();
            s->span = span_from(start);
            return s;
        }
        if (at_kw("while")) {
            advance();
            auto s = std::make_unique<WhileStmt>();
            expect_punct("(");
            s->cond = parse_expr();
            expect_punct(")");
            s->body = parse_body();
            s->span = span_from(start);
            return s;
        }
        if (at_kw("for")) {
            advance();
            auto s = std::make_unique<ForStmt>();
            expect_punct("(");
            if (!at_punct(";")) {
                s->init = at_local_decl() ? parse_var_decl() : parse_simple_stmt();
            }
            expect_punct(";");
            if (!at_punct(";")) s->cond = parse_expr();
            expect_punct(";");
            if (!at_punct(")")) s->update = parse_simple_stmt();
            expect_punct(")");
            s->body = parse_body();
            s->span = span_from(start);
            return s;
        }
        if (at_kw("return")) {
            advance();
            ExprPtr v;
            if (!at_punct(";")) v = parse_expr();
            expect_punct(";");
            auto s = std::make_unique<ReturnStmt>(std::move(v));
            s->span = span_from(start);
            return s;
        }
        if (at_kw("assert")) {
            advance();
            ExprPtr cond = parse_expr();
            ExprPtr msg;
            if (eat_punct(":")) msg = parse_expr();
            expect_punct(";");
            auto s = std::make_unique<AssertStmt>(std::move(cond), std::move(msg));
            s->span = span_from(start);
            return s;
        }
        if (at_kw("throw")) {
            advance();
            ExprPtr v = parse_expr();
            expect_punct(";");
            auto s = std::make_unique<ThrowStmt>(std::move(v));
            s->span = span_from(start);
            return s;
        }
        if (at_kw("final")) fail("final locals are outside the subset");
        if (peek().kind == TokKind::Keyword && !at_primitive_type() && !at_kw("new") &&
            !at_kw("true") && !at_kw("false"))
            fail("keyword '" + peek().text + "' is outside the subset");
        if (at_local_decl()) {
            StmtPtr s = parse_var_decl();
            expect_punct(";");
            return s;
        }
        StmtPtr s = parse_simple_stmt();
        expect_punct(";");
        return s;
    }

    // ---- declarations -----------------------------------------------------

    struct Mods {
        Visibility vis = Visibility::None;
        bool is_static = false;
        bool is_final = false;
    };

    Mods parse_mods() {
        Mods m;
        while (true) {
            if (eat_kw("public")) m.vis = Visibility::Public;
            else if (eat_kw("private")) m.vis = Visibility::Private;
            else if (eat_kw("protected")) m.vis = Visibility::Protected;
            else if (eat_kw("static")) m.is_static = true;
            else if (eat_kw("final")) m.is_final = true;
            else break;
        }
        return m;
    }

    void parse_member(ClassDecl& cls) {
        SourceSpan start = peek().span;
        Mods m = parse_mods();
        if (at_kw("class") || at_kw("interface") || at_kw("enum"))
            fail("nested type declarations are outside the subset");
        Type type;
        if (eat_kw("void")) type = Type::void_type();
        else type = parse_type();
        if (at_punct("(")) fail("constructors are outside the subset");
        std::string name = expect_ident();

        if (at_punct("(")) {
            MethodDecl md;
            md.vis = m.vis;
            md.is_static = m.is_static;
            md.is_final = m.is_final;
            md.return_type = type;
            md.name = std::move(name);
            advance();
            if (!at_punct(")")) {
                do {
                    Param p;
                    p.type = parse_type();
                    p.name = expect_ident();
                    md.params.push_back(std::move(p));
                } while (eat_punct(","));
            }
            expect_punct(")");
            if (at_kw("throws")) fail("throws clauses are outside the subset");
            md.body = parse_block();
            md.span = span_from(start);
            cls.methods.push_back(std::move(md));
        } else {
            if (type.is_void()) fail("field of type void");
            FieldDecl fd;
            fd.vis = m.vis;
            fd.is_static = m.is_static;
            fd.is_final = m.is_final;
            fd.type = type;
            fd.name = std::move(name);
            if (eat_punct("=")) fd.init = parse_expr();
            if (at_punct(",")) fail("multiple declarators are outside the subset");
            expect_punct(";");
            fd.span = span_from(start);
            cls.fields.push_back(std::move(fd));
        }
    }

    Ast parse_unit() {
        Ast unit;
        if (eat_kw("package")) {
            unit.package_name = parse_qualified_name(false);
            expect_punct(";");
        }
        while (eat_kw("import")) {
            if (at_kw("static")) fail("static imports are outside the subset");
            unit.imports.push_back(parse_qualified_name(true));
            expect_punct(";");
        }
        SourceSpan start = peek().span;
        Mods m = parse_mods();
        if (at_kw("abstract") || at_kw("interface") || at_kw("enum"))
            fail("only plain classes are in the subset");
        if (!eat_kw("class")) fail("expected class declaration");
        unit.cls.vis = m.vis;
        unit.cls.is_final = m.is_final;
        if (m.is_static) fail("top-level class cannot be static");
        unit.cls.name = expect_ident();
        if (at_kw("extends") || at_kw("implements"))
            fail("inheritance is outside the subset");
        if (at_punct("<")) fail("generic classes are outside the subset");
        expect_punct("{");
        while (!at_punct("}")) {
            if (peek().kind == TokKind::Eof) fail("unterminated class body");
            parse_member(unit.cls);
        }
        advance();
        unit.cls.span = span_from(start);
        if (peek().kind != TokKind::Eof)
            fail("multiple top-level declarations are outside the subset");
        return unit;
    }
};

} // namespace

Ast parse(const std::vector<Token>& tokens) {
    Parser p{tokens};
    return p.parse_unit();
}

Ast parse_source(std::string_view source) {
    return parse(tokenize(source));
}

} // namespace argforge
