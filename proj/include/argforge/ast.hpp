#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argforge/source.hpp"

namespace argforge {

// ---------------------------------------------------------------------------
// Types

enum class Prim { Boolean, Byte, Char, Short, Int, Long, Float, Double };

const char* prim_name(Prim p);
std::optional<Prim> prim_from_name(std::string_view name);

/// The eight supported primitive names, in a fixed order.
const std::vector<std::string>& all_prim_names();

struct Type {
    enum class K { Void, Primitive, PrimArray, Named, NamedArray };
    K k = K::Void;
    Prim prim = Prim::Int;   // Primitive / PrimArray
    std::string name;        // Named / NamedArray (simple or qualified)

    static Type void_type() { return {}; }
    static Type of(Prim p) { return {K::Primitive, p, {}}; }
    static Type array_of(Prim p) { return {K::PrimArray, p, {}}; }
    static Type named(std::string n) { return {K::Named, Prim::Int, std::move(n)}; }
    static Type named_array(std::string n) { return {K::NamedArray, Prim::Int, std::move(n)}; }

    bool is_void() const { return k == K::Void; }
    bool is_primitive() const { return k == K::Primitive; }
    bool is_prim_array() const { return k == K::PrimArray; }
    bool is_named() const { return k == K::Named; }
    bool is_numeric() const;

    bool operator==(const Type&) const = default;
};

std::string type_to_string(const Type& t);

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
    BoolLit, CharLit, IntLit, FloatLit, StringLit,
    Name, FieldAccess, Call, Unary, Binary, Conditional,
    Cast, ArrayNew, ObjectNew, ArrayIndex,
};

struct Expr {
    ExprKind kind;
    SourceSpan span{};
    int id = -1;   // assigned by assign_ids, -1 until then

    explicit Expr(ExprKind k) : kind(k) {}
    virtual ~Expr() = default;
};

using ExprPtr = std::unique_ptr<Expr>;

struct BoolLit : Expr {
    bool value = false;
    explicit BoolLit(bool v) : Expr(ExprKind::BoolLit), value(v) {}
};

struct CharLit : Expr {
    uint32_t value = 0;
    explicit CharLit(uint32_t v) : Expr(ExprKind::CharLit), value(v) {}
};

struct IntLit : Expr {
    long long value = 0;
    bool is_long = false;
    IntLit(long long v, bool l) : Expr(ExprKind::IntLit), value(v), is_long(l) {}
};

struct FloatLit : Expr {
    double value = 0;
    bool is_float = false;   // 'f' suffix
    FloatLit(double v, bool f) : Expr(ExprKind::FloatLit), value(v), is_float(f) {}
};

struct StringLit : Expr {
    std::string value;   // decoded
    explicit StringLit(std::string v) : Expr(ExprKind::StringLit), value(std::move(v)) {}
};

struct NameRef : Expr {
    std::string name;
    explicit NameRef(std::string n) : Expr(ExprKind::Name), name(std::move(n)) {}
};

struct FieldAccessExpr : Expr {
    ExprPtr base;
    std::string member;
    FieldAccessExpr(ExprPtr b, std::string m)
        : Expr(ExprKind::FieldAccess), base(std::move(b)), member(std::move(m)) {}
};

struct CallExpr : Expr {
    ExprPtr base;   // null for unqualified calls
    std::string name;
    std::vector<ExprPtr> args;
    CallExpr(ExprPtr b, std::string n, std::vector<ExprPtr> a)
        : Expr(ExprKind::Call), base(std::move(b)), name(std::move(n)), args(std::move(a)) {}
};

struct UnaryExpr : Expr {
    enum class Op { Neg, Plus, Not, BitNot };
    Op op;
    ExprPtr operand;
    UnaryExpr(Op o, ExprPtr e) : Expr(ExprKind::Unary), op(o), operand(std::move(e)) {}
};

struct BinaryExpr : Expr {
    enum class Op {
        Mul, Div, Mod, Add, Sub,
        Shl, Shr, UShr,
        Lt, Le, Gt, Ge, Eq, Ne,
        BitAnd, BitXor, BitOr,
        And, Or,
    };
    Op op;
    ExprPtr lhs, rhs;
    BinaryExpr(Op o, ExprPtr l, ExprPtr r)
        : Expr(ExprKind::Binary), op(o), lhs(std::move(l)), rhs(std::move(r)) {}
};

struct ConditionalExpr : Expr {
    ExprPtr cond, then_expr, else_expr;
    ConditionalExpr(ExprPtr c, ExprPtr t, ExprPtr e)
        : Expr(ExprKind::Conditional), cond(std::move(c)),
          then_expr(std::move(t)), else_expr(std::move(e)) {}
};

struct CastExpr : Expr {
    Type target;   // primitive or primitive array only
    ExprPtr operand;
    CastExpr(Type t, ExprPtr e) : Expr(ExprKind::Cast), target(t), operand(std::move(e)) {}
};

struct ArrayNewExpr : Expr {
    Prim elem;
    ExprPtr length;
    ArrayNewExpr(Prim e, ExprPtr l) : Expr(ExprKind::ArrayNew), elem(e), length(std::move(l)) {}
};

struct ObjectNewExpr : Expr {
    std::string type_name;
    std::vector<ExprPtr> args;
    ObjectNewExpr(std::string t, std::vector<ExprPtr> a)
        : Expr(ExprKind::ObjectNew), type_name(std::move(t)), args(std::move(a)) {}
};

struct ArrayIndexExpr : Expr {
    ExprPtr base, index;
    ArrayIndexExpr(ExprPtr b, ExprPtr i)
        : Expr(ExprKind::ArrayIndex), base(std::move(b)), index(std::move(i)) {}
};

// ---------------------------------------------------------------------------
// Statements

enum class StmtKind {
    Block, VarDecl, ExprStmt, Assign, If, While, For, Return, Assert, Throw,
};

struct Stmt {
    StmtKind kind;
    SourceSpan span{};
    explicit Stmt(StmtKind k) : kind(k) {}
    virtual ~Stmt() = default;
};

using StmtPtr = std::unique_ptr<Stmt>;

struct BlockStmt : Stmt {
    std::vector<StmtPtr> stmts;
    BlockStmt() : Stmt(StmtKind::Block) {}
};

struct VarDeclStmt : Stmt {
    Type type;
    std::string name;
    ExprPtr init;   // may be null
    VarDeclStmt(Type t, std::string n, ExprPtr i)
        : Stmt(StmtKind::VarDecl), type(t), name(std::move(n)), init(std::move(i)) {}
};

struct ExprStmt : Stmt {
    ExprPtr expr;
    explicit ExprStmt(ExprPtr e) : Stmt(StmtKind::ExprStmt), expr(std::move(e)) {}
};

struct AssignStmt : Stmt {
    ExprPtr target;   // NameRef, FieldAccess, or ArrayIndex
    ExprPtr value;
    AssignStmt(ExprPtr t, ExprPtr v)
        : Stmt(StmtKind::Assign), target(std::move(t)), value(std::move(v)) {}
};

struct IfStmt : Stmt {
    ExprPtr cond;
    std::unique_ptr<BlockStmt> then_block;
    std::unique_ptr<BlockStmt> else_block;   // may be null
    IfStmt() : Stmt(StmtKind::If) {}
};

struct WhileStmt : Stmt {
    ExprPtr cond;
    std::unique_ptr<BlockStmt> body;
    WhileStmt() : Stmt(StmtKind::While) {}
};

struct ForStmt : Stmt {
    StmtPtr init;     // VarDecl or Assign, may be null
    ExprPtr cond;     // may be null
    StmtPtr update;   // Assign or ExprStmt, may be null
    std::unique_ptr<BlockStmt> body;
    ForStmt() : Stmt(StmtKind::For) {}
};

struct ReturnStmt : Stmt {
    ExprPtr value;   // may be null
    explicit ReturnStmt(ExprPtr v) : Stmt(StmtKind::Return), value(std::move(v)) {}
};

struct AssertStmt : Stmt {
    ExprPtr cond;
    ExprPtr message;   // may be null
    AssertStmt(ExprPtr c, ExprPtr m)
        : Stmt(StmtKind::Assert), cond(std::move(c)), message(std::move(m)) {}
};

struct ThrowStmt : Stmt {
    ExprPtr value;
    explicit ThrowStmt(ExprPtr v) : Stmt(StmtKind::Throw), value(std::move(v)) {}
};

// ---------------------------------------------------------------------------
// Declarations

enum class Visibility { None, Public, Private, Protected };

struct FieldDecl {
    Visibility vis = Visibility::None;
    bool is_static = false;
    bool is_final = false;
    Type type;
    std::string name;
    ExprPtr init;   // may be null
    SourceSpan span{};
};

struct Param {
    Type type;
    std::string name;
};

struct MethodDecl {
    Visibility vis = Visibility::None;
    bool is_static = false;
    bool is_final = false;
    Type return_type;   // Void for void
    std::string name;
    std::vector<Param> params;
    std::unique_ptr<BlockStmt> body;
    SourceSpan span{};

    bool is_entry() const;   // `main(String[] ...)`
};

struct ClassDecl {
    Visibility vis = Visibility::None;
    bool is_final = false;
    std::string name;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    SourceSpan span{};
};

/// One compilation unit: exactly one top-level class.
struct CompilationUnit {
    std::optional<std::string> package_name;
    std::vector<std::string> imports;
    std::vector<std::string> header_comment;   // lines, without `//`
    ClassDecl cls;
};

using Ast = CompilationUnit;

// ---------------------------------------------------------------------------
// Utilities

ExprPtr clone(const Expr& e);
StmtPtr clone(const Stmt& s);
std::unique_ptr<BlockStmt> clone(const BlockStmt& b);
Ast clone(const Ast& u);

/// Structural equality, ignoring spans, node ids, and the header comment.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Ast& a, const Ast& b);

/// Numbers every expression node in pre-order, depth first, declaration
/// order. Returns the number of nodes.
int assign_ids(Ast& unit);

/// Calls f on every expression node (including subexpressions) in the unit.
void for_each_expr(const Ast& unit, const std::function<void(const Expr&)>& f);
void for_each_expr(const Expr& e, const std::function<void(const Expr&)>& f);

} // namespace argforge
