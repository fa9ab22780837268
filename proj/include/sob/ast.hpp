#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sob/level.hpp"
#include "sob/value.hpp"

namespace sob {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

// Semantic type annotation: plain name, or Fut[T] / List[T].
struct TypeRef {
    std::string name;
    std::shared_ptr<TypeRef> arg;

    std::string text() const {
        return arg ? name + "[" + arg->text() + "]" : name;
    }
};

// ---------------------------------------------------------------- expressions

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

enum class BinOpKind { Add, Sub, Mul, Eq, Lt, And, Or, Cons };
enum class UnOpKind { Not, Head, Tail };

enum class VarKind { Unknown, Field, ClassParam, Formal, Local };

struct VarExpr {
    std::string name;
    VarKind kind = VarKind::Unknown; // filled by the resolver
};
// Literals parsed from source are tagged L; the engine injects tagged
// literals when reducing get statements.
struct LiteralExpr {
    TaggedValue v;
};
struct BinOpExpr {
    BinOpKind op;
    ExprPtr lhs, rhs;
};
struct UnOpExpr {
    UnOpKind op;
    ExprPtr operand;
};
struct ListLitExpr {
    std::vector<ExprPtr> elems;
};
struct ThisExpr {};

struct Expr {
    SourceLoc loc;
    std::variant<VarExpr, LiteralExpr, BinOpExpr, UnOpExpr, ListLitExpr, ThisExpr> node;
};

// ----------------------------------------------------------------- statements

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;
using StmtList = std::vector<StmtPtr>;

// Signature attached to every call site by the resolver. formal_levels is
// the declared level of each formal parameter of the callee method.
struct ResolvedSig {
    std::string iface;
    std::string method;
    std::vector<Level> formal_levels;
    Level return_level = Level::L;
};

struct NewObjectStmt {
    std::string target;
    Level level = Level::L; // level subscript of new; defaults to L
    bool level_explicit = false;
    std::string cls;
    std::vector<ExprPtr> args;
    std::shared_ptr<ResolvedSig> sig; // init signature
};
struct ReturnStmt {
    ExprPtr value;
};
struct IfStmt {
    ExprPtr cond;
    StmtList then_branch;
    StmtList else_branch;
};
struct SimpleCallStmt { // !o.m(es); callee may evaluate to a list (multicast)
    ExprPtr callee;
    std::string method;
    std::vector<ExprPtr> args;
    std::shared_ptr<ResolvedSig> sig;
};
struct FutCallStmt { // q!o.m(es)
    std::string future_var;
    ExprPtr callee;
    std::string method;
    std::vector<ExprPtr> args;
    std::shared_ptr<ResolvedSig> sig;
};
struct GetStmt { // q?(x)
    std::string future_var;
    std::string target;
};
struct AssignStmt {
    std::string target;
    ExprPtr value;
};
// Runtime-only marker injected by rule if-high; never parsed from source.
struct EndIfStmt {
    StmtList untaken;
};

struct Stmt {
    SourceLoc loc;
    std::variant<NewObjectStmt, ReturnStmt, IfStmt, SimpleCallStmt, FutCallStmt,
                 GetStmt, AssignStmt, EndIfStmt>
        node;
};

// --------------------------------------------------------------- declarations

struct VarDecl {
    std::string name;
    TypeRef type;
    Level level = Level::L;
    bool level_explicit = false;
    ExprPtr init; // optional initializer (fields, locals)
    SourceLoc loc;
};

struct MethodSig {
    std::string name;
    std::vector<VarDecl> formals;
    TypeRef return_type;
    Level return_level = Level::L;
    bool return_level_explicit = false;
    SourceLoc loc;
};

struct MethodDecl {
    MethodSig sig;
    std::vector<VarDecl> locals; // leading declarations of the body
    StmtList body;
};

struct InterfaceDecl {
    std::string name;
    std::vector<MethodSig> methods;
    SourceLoc loc;
};

struct ClassDecl {
    std::string name;
    std::vector<VarDecl> params;
    std::string iface; // implemented interface
    std::vector<VarDecl> fields;
    StmtList init_stmts;
    std::vector<MethodDecl> methods;
    SourceLoc loc;
};

struct DataDecl {
    std::string name;
    std::string kind; // Int, Bool or String; value representation
    SourceLoc loc;
};

struct Program {
    std::vector<DataDecl> data_decls;
    std::vector<InterfaceDecl> interfaces;
    std::vector<ClassDecl> classes;
};

StmtPtr make_stmt(SourceLoc loc, auto&& node) {
    return std::make_shared<Stmt>(Stmt{loc, std::forward<decltype(node)>(node)});
}

ExprPtr make_expr(SourceLoc loc, auto&& node) {
    return std::make_shared<Expr>(Expr{loc, std::forward<decltype(node)>(node)});
}

} // namespace sob
