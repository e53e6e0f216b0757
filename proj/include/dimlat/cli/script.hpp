#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dimlat/algebra.hpp"
#include "dimlat/chainset.hpp"
#include "dimlat/cli/lexer.hpp"

namespace dimlat::cli {

struct AlgebraStmt {
    std::string name;
    std::vector<Atom> atoms;
    friend bool operator==(const AlgebraStmt&, const AlgebraStmt&) = default;
};

/// `elem` binds a class; `rep` binds a representation. Values are stored for every
/// atom, in the algebra's atom order.
struct ElemStmt {
    std::string name;
    std::string algebra;
    std::vector<ExtValue> values;
    friend bool operator==(const ElemStmt&, const ElemStmt&) = default;
};

struct RepStmt {
    std::string name;
    std::string algebra;
    std::vector<ExtValue> values;
    friend bool operator==(const RepStmt&, const RepStmt&) = default;
};

struct FamilyStmt {
    std::string name;
    std::vector<std::string> members;
    friend bool operator==(const FamilyStmt&, const FamilyStmt&) = default;
};

/// Per-atom value sets, in the algebra's atom order.
struct DescribedStmt {
    std::string name;
    std::string algebra;
    std::vector<ChainSet> sets;
    friend bool operator==(const DescribedStmt&, const DescribedStmt&) = default;
};

enum class QueryOp {
    Leq,
    Add,
    Meet,
    Join,
    Sup,
    Inf,
    Closure,
    InClosure,
    IsT0,
    IsT1,
    IsNormal,
    Unit,
    FormalSum,
    RepSub,
    RepSuper,
    OracleCheck,
};

std::string_view op_name(QueryOp op);

struct QueryStmt {
    QueryOp op;
    std::vector<std::string> args;
    std::optional<ExtValue> index; ///< rep_sub / rep_super "at" clause
    std::vector<long> shape;       ///< oracle_check
    friend bool operator==(const QueryStmt&, const QueryStmt&) = default;
};

using StmtBody = std::variant<AlgebraStmt, ElemStmt, RepStmt, FamilyStmt, DescribedStmt, QueryStmt>;

struct Stmt {
    StmtBody body;
    Pos pos;
    /// Positions are not part of a statement's identity.
    friend bool operator==(const Stmt& a, const Stmt& b) { return a.body == b.body; }
};

struct Script {
    std::vector<Stmt> stmts;
    friend bool operator==(const Script&, const Script&) = default;
};

/// Lexes, parses and checks a script: names are bound before use and never
/// rebound, arguments have the right kinds, and every literal value is admissible
/// on its atom. Throws ParseError at the first problem.
Script parse(std::string_view src);

/// Canonical text; parse(print(s)) == s.
std::string print(const Script& s);

/// "leq p q", "rep_sub F at aleph 0", "oracle_check (2, 3)".
std::string query_text(const QueryStmt& q);

} // namespace dimlat::cli
