#include <map>
#include <set>

#include "dimlat/cli/script.hpp"
#include "dimlat/representation.hpp"

namespace dimlat::cli {

namespace {

enum class Sym { Algebra, Elem, Rep, Family, Described };

std::string sym_name(Sym s) {
    switch (s) {
    case Sym::Algebra:
        return "an algebra";
    case Sym::Elem:
        return "an element";
    case Sym::Rep:
        return "a representation";
    case Sym::Family:
        return "a family";
    case Sym::Described:
        return "a described family";
    }
    return "a name";
}

struct Symbol {
    Sym kind;
    std::string algebra;
    AlgebraRef alg;           ///< algebras only
    Sym member_kind = Sym::Elem; ///< explicit families only
    std::vector<std::pair<std::string, RepClass>> reps{}; ///< representations and their families
};

const std::set<std::string, std::less<>> reserved = {
    "algebra", "atom",    "elem",      "rep",         "family",    "over",        "described", "aleph",
    "naturals", "inf",    "at",        "leq",         "add",       "meet",        "join",      "sup",
    "closure", "in_closure", "is_T0",  "is_T1",       "is_normal", "unit",        "formal_sum", "rep_sub",
    "rep_super", "oracle_check"};

const std::map<std::string, QueryOp, std::less<>> query_ops = {
    {"leq", QueryOp::Leq},           {"add", QueryOp::Add},
    {"meet", QueryOp::Meet},         {"join", QueryOp::Join},
    {"sup", QueryOp::Sup},           {"inf", QueryOp::Inf},
    {"closure", QueryOp::Closure},   {"in_closure", QueryOp::InClosure},
    {"is_T0", QueryOp::IsT0},        {"is_T1", QueryOp::IsT1},
    {"is_normal", QueryOp::IsNormal}, {"unit", QueryOp::Unit},
    {"formal_sum", QueryOp::FormalSum}, {"rep_sub", QueryOp::RepSub},
    {"rep_super", QueryOp::RepSuper}, {"oracle_check", QueryOp::OracleCheck}};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_{std::move(toks)} {}

    Script run() {
        Script s;
        while (peek().kind != Tok::End)
            s.stmts.push_back(statement());
        return s;
    }

  private:
    // ---- token helpers

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = toks_[i_];
        if (i_ + 1 < toks_.size())
            ++i_;
        return t;
    }

    [[noreturn]] static void fail(ErrorKind k, Pos p, const std::string& msg) { throw ParseError(k, p, msg); }

    static std::string shown(const Token& t) {
        return t.kind == Tok::End ? describe(Tok::End) : "'" + t.text + "'";
    }

    [[noreturn]] void unexpected(const std::string& wanted) const {
        fail(ErrorKind::Syntax, peek().pos, "expected " + wanted + ", found " + shown(peek()));
    }

    const Token& expect(Tok k) {
        if (peek().kind != k)
            unexpected(describe(k));
        return next();
    }

    bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

    const Token& expect_word(std::string_view w) {
        if (!at_word(w))
            unexpected("'" + std::string{w} + "'");
        return next();
    }

    const Token& new_name() {
        const Token& t = expect(Tok::Ident);
        if (reserved.count(t.text))
            fail(ErrorKind::Syntax, t.pos, "'" + t.text + "' is a reserved word and cannot be used as a name");
        return t;
    }

    // ---- symbols

    void bind(const Token& name, Symbol s) {
        if (syms_.count(name.text))
            fail(ErrorKind::Binding, name.pos, "name '" + name.text + "' is already bound");
        syms_.emplace(name.text, std::move(s));
    }

    const Symbol& lookup(const Token& name) const {
        auto it = syms_.find(name.text);
        if (it == syms_.end())
            fail(ErrorKind::Binding, name.pos, "unknown name '" + name.text + "'");
        return it->second;
    }

    const Symbol& lookup(const Token& name, std::initializer_list<Sym> kinds, const std::string& wanted) const {
        const Symbol& s = lookup(name);
        for (Sym k : kinds) {
            if (s.kind == k)
                return s;
        }
        fail(ErrorKind::Binding, name.pos, "'" + name.text + "' is " + sym_name(s.kind) + ", expected " + wanted);
    }

    const AlgebraRef& algebra_named(const std::string& name) const { return syms_.at(name).alg; }

    // ---- literals

    long small_int(const Token& t, long lo, long hi, const std::string& what) const {
        Integer z{t.text};
        if (z < lo || z > hi)
            fail(ErrorKind::Domain, t.pos,
                 what + " " + t.text + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return z.get_si();
    }

    int aleph_level() {
        const Token& kw = expect_word("aleph");
        const Token& n = expect(Tok::Int);
        Integer z{n.text};
        if (z > max_aleph())
            fail(ErrorKind::Domain, kw.pos,
                 "aleph " + n.text + " exceeds the configured maximum aleph " + std::to_string(max_aleph()));
        return static_cast<int>(z.get_si());
    }

    static Rational rational(const Token& t) {
        Rational q{t.text};
        q.canonicalize();
        return q;
    }

    ExtValue value() {
        if (at_word("aleph"))
            return ExtValue::aleph(aleph_level());
        if (peek().kind == Tok::Int || peek().kind == Tok::Rational)
            return ExtValue::fin(rational(next()));
        unexpected("a value (k, k/n or aleph k)");
    }

    AtomType atom_type() {
        const Token& t = expect(Tok::Ident);
        auto paren_aleph = [&] {
            expect(Tok::LParen);
            int lvl = aleph_level();
            expect(Tok::RParen);
            return lvl;
        };
        if (t.text == "I_fin") {
            expect(Tok::LParen);
            const Token& n = expect(Tok::Int);
            long size = small_int(n, 1, 1L << 30, "matrix size");
            expect(Tok::RParen);
            return AtomType::i_fin(size);
        }
        if (t.text == "II_1")
            return AtomType::ii_1();
        if (t.text == "I_inf")
            return AtomType::i_inf(paren_aleph());
        if (t.text == "II_inf")
            return AtomType::ii_inf(paren_aleph());
        if (t.text == "III")
            return AtomType::iii(paren_aleph());
        fail(ErrorKind::Syntax, t.pos,
             "unknown atom type '" + t.text + "'; expected I_fin(n), I_inf(aleph k), II_1, II_inf(aleph k) or III(aleph k)");
    }

    ChainSet chainset() {
        expect(Tok::LBrace);
        std::vector<RationalInterval> ivs;
        std::vector<IntegerRun> runs;
        std::vector<Rational> pts;
        std::vector<int> alephs;
        bool first = true;
        while (peek().kind != Tok::RBrace) {
            if (!first)
                expect(Tok::Comma);
            first = false;
            const Token& t = peek();
            if (t.kind == Tok::LBracket || t.kind == Tok::LParen) {
                bool lo_closed = next().kind == Tok::LBracket;
                Rational lo = fin_literal();
                expect(Tok::Comma);
                std::optional<Rational> hi;
                if (at_word("inf")) {
                    next();
                    if (peek().kind != Tok::RParen)
                        unexpected("')' after inf");
                } else {
                    hi = fin_literal();
                }
                if (peek().kind != Tok::RBracket && peek().kind != Tok::RParen)
                    unexpected("']' or ')'");
                bool hi_closed = next().kind == Tok::RBracket;
                ivs.push_back(RationalInterval{lo, lo_closed, hi, hi ? hi_closed : false});
            } else if (at_word("naturals")) {
                next();
                runs.push_back(IntegerRun{Integer{0}, std::nullopt});
            } else if (at_word("aleph")) {
                alephs.push_back(aleph_level());
            } else if (t.kind == Tok::Int && peek(1).kind == Tok::DotDot) {
                Integer lo{next().text};
                next();
                std::optional<Integer> hi;
                if (at_word("inf"))
                    next();
                else
                    hi = Integer{expect(Tok::Int).text};
                runs.push_back(IntegerRun{lo, hi});
            } else if (t.kind == Tok::Int || t.kind == Tok::Rational) {
                pts.push_back(rational(next()));
            } else {
                unexpected("an interval, run, value, 'naturals' or 'aleph k'");
            }
        }
        expect(Tok::RBrace);
        return ChainSet::of(std::move(ivs), std::move(runs), std::move(pts), std::move(alephs));
    }

    Rational fin_literal() {
        if (peek().kind != Tok::Int && peek().kind != Tok::Rational)
            unexpected("a rational k or k/n");
        return rational(next());
    }

    // ---- statements

    Stmt statement() {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            unexpected("a statement");
        Pos pos = t.pos;
        if (t.text == "algebra")
            return Stmt{algebra_stmt(), pos};
        if (t.text == "elem" || t.text == "rep")
            return value_stmt();
        if (t.text == "family")
            return family_stmt();
        if (auto it = query_ops.find(t.text); it != query_ops.end())
            return Stmt{query_stmt(it->second), pos};
        fail(ErrorKind::Syntax, t.pos, "expected a statement, found '" + t.text + "'");
    }

    AlgebraStmt algebra_stmt() {
        expect_word("algebra");
        const Token& name = new_name();
        expect(Tok::LBrace);
        std::vector<Atom> atoms;
        std::set<std::string> ids;
        do {
            expect_word("atom");
            const Token& id = new_name();
            if (!ids.insert(id.text).second)
                fail(ErrorKind::Binding, id.pos, "duplicate atom '" + id.text + "' in algebra '" + name.text + "'");
            expect(Tok::Colon);
            atoms.push_back(Atom{id.text, atom_type()});
            expect(Tok::Semi);
        } while (!(peek().kind == Tok::RBrace));
        expect(Tok::RBrace);
        if (peek().kind == Tok::Semi)
            next();
        AlgebraStmt s{name.text, atoms};
        bind(name, Symbol{Sym::Algebra, name.text, AlgebraDesc::make(std::move(atoms), name.text)});
        return s;
    }

    Stmt value_stmt() {
        const Token& kw = next();
        const bool is_rep = kw.text == "rep";
        const Token& name = new_name();
        expect_word("over");
        const Token& alg_name = expect(Tok::Ident);
        const Symbol& as = lookup(alg_name, {Sym::Algebra}, "an algebra");
        const AlgebraRef alg = as.alg;
        expect(Tok::Equals);
        expect(Tok::LBrace);
        std::vector<ExtValue> vals(alg->size());
        std::vector<bool> seen(alg->size(), false);
        do {
            const Token& atom = expect(Tok::Ident);
            auto idx = alg->index_of(atom.text);
            if (!idx)
                fail(ErrorKind::Binding, atom.pos, "algebra '" + alg_name.text + "' has no atom '" + atom.text + "'");
            if (seen[*idx])
                fail(ErrorKind::Binding, atom.pos, "atom '" + atom.text + "' given twice");
            seen[*idx] = true;
            expect(Tok::Colon);
            Pos vpos = peek().pos;
            ExtValue v = value();
            const auto& type = alg->atom(*idx).type;
            std::string err = is_rep ? rep_value_error(type, v) : admissibility_error(type, v, ClassKind::Cone);
            if (!err.empty())
                fail(ErrorKind::Domain, vpos, err);
            vals[*idx] = v;
            if (peek().kind == Tok::Comma)
                next();
        } while (peek().kind != Tok::RBrace);
        expect(Tok::RBrace);
        expect(Tok::Semi);
        if (is_rep) {
            Symbol sym{Sym::Rep, alg_name.text, nullptr};
            sym.reps.emplace_back(name.text, RepClass{alg, vals});
            bind(name, std::move(sym));
            return Stmt{RepStmt{name.text, alg_name.text, std::move(vals)}, kw.pos};
        }
        bind(name, Symbol{Sym::Elem, alg_name.text, nullptr});
        return Stmt{ElemStmt{name.text, alg_name.text, std::move(vals)}, kw.pos};
    }

    Stmt family_stmt() {
        const Token& kw = expect_word("family");
        const Token& name = new_name();
        if (at_word("over"))
            return described(kw, name);
        expect(Tok::Equals);
        expect(Tok::LBracket);
        std::vector<std::string> members;
        std::optional<Symbol> first;
        std::vector<std::pair<std::string, RepClass>> reps;
        do {
            const Token& m = expect(Tok::Ident);
            const Symbol& s = lookup(m, {Sym::Elem, Sym::Rep}, "an element or a representation");
            if (!first) {
                first = s;
            } else if (s.kind != first->kind) {
                fail(ErrorKind::Binding, m.pos, "family mixes elements and representations");
            } else if (s.algebra != first->algebra) {
                fail(ErrorKind::Binding, m.pos,
                     "'" + m.text + "' is over '" + s.algebra + "', family is over '" + first->algebra + "'");
            }
            members.push_back(m.text);
            reps.insert(reps.end(), s.reps.begin(), s.reps.end());
            if (peek().kind == Tok::Comma)
                next();
        } while (peek().kind != Tok::RBracket);
        expect(Tok::RBracket);
        expect(Tok::Semi);
        bind(name, Symbol{Sym::Family, first->algebra, nullptr, first->kind, std::move(reps)});
        return Stmt{FamilyStmt{name.text, std::move(members)}, kw.pos};
    }

    Stmt described(const Token& kw, const Token& name) {
        expect_word("over");
        const Token& alg_name = expect(Tok::Ident);
        const AlgebraRef alg = lookup(alg_name, {Sym::Algebra}, "an algebra").alg;
        expect_word("described");
        const Token& open = expect(Tok::LBrace);
        std::vector<ChainSet> sets(alg->size());
        std::vector<bool> seen(alg->size(), false);
        do {
            const Token& atom = expect(Tok::Ident);
            auto idx = alg->index_of(atom.text);
            if (!idx)
                fail(ErrorKind::Binding, atom.pos, "algebra '" + alg_name.text + "' has no atom '" + atom.text + "'");
            if (seen[*idx])
                fail(ErrorKind::Binding, atom.pos, "atom '" + atom.text + "' given twice");
            seen[*idx] = true;
            expect(Tok::Colon);
            Pos spos = peek().pos;
            ChainSet s = chainset();
            const auto& type = alg->atom(*idx).type;
            if (s.empty())
                fail(ErrorKind::Domain, spos, "empty value set for atom '" + atom.text + "'");
            if (!admissible_set(type, s, ClassKind::Cone))
                fail(ErrorKind::Domain, spos,
                     "value set " + s.to_string() + " not admissible on " + type.to_string() + " atom");
            sets[*idx] = std::move(s);
            if (peek().kind == Tok::Comma)
                next();
        } while (peek().kind != Tok::RBrace);
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i])
                fail(ErrorKind::Binding, open.pos, "described family gives no value set for atom '" + alg->atom(i).id + "'");
        }
        expect(Tok::RBrace);
        expect(Tok::Semi);
        bind(name, Symbol{Sym::Described, alg_name.text, nullptr});
        return Stmt{DescribedStmt{name.text, alg_name.text, std::move(sets)}, kw.pos};
    }

    const Symbol& arg(QueryStmt& q, std::initializer_list<Sym> kinds, const std::string& wanted) {
        const Token& t = expect(Tok::Ident);
        const Symbol& s = lookup(t, kinds, wanted);
        q.args.push_back(t.text);
        arg_pos_.push_back(t.pos);
        return s;
    }

    void same_algebra_args(const Symbol& a, const Symbol& b) const {
        if (a.algebra != b.algebra)
            fail(ErrorKind::Binding, arg_pos_.back(),
                 "'" + a.algebra + "' and '" + b.algebra + "' are different algebras");
    }

    void elem_family(const Symbol& s) const {
        if (s.kind == Sym::Family && s.member_kind != Sym::Elem)
            fail(ErrorKind::Binding, arg_pos_.back(), "family of representations where a family of elements is expected");
    }

    QueryStmt query_stmt(QueryOp op) {
        next();
        QueryStmt q{op, {}, std::nullopt, {}};
        arg_pos_.clear();
        switch (op) {
        case QueryOp::Leq:
        case QueryOp::Add:
        case QueryOp::Meet:
        case QueryOp::Join: {
            const Symbol a = arg(q, {Sym::Elem}, "an element");
            const Symbol b = arg(q, {Sym::Elem}, "an element");
            same_algebra_args(a, b);
            break;
        }
        case QueryOp::Sup:
        case QueryOp::Inf:
            elem_family(arg(q, {Sym::Family, Sym::Described}, "a family"));
            break;
        case QueryOp::Closure:
            elem_family(arg(q, {Sym::Elem, Sym::Family, Sym::Described}, "an element or a family"));
            break;
        case QueryOp::InClosure: {
            const Symbol a = arg(q, {Sym::Elem}, "an element");
            const Symbol b = arg(q, {Sym::Elem, Sym::Family, Sym::Described}, "an element or a family");
            elem_family(b);
            same_algebra_args(a, b);
            break;
        }
        case QueryOp::IsT0:
        case QueryOp::IsT1:
        case QueryOp::IsNormal:
        case QueryOp::Unit:
            arg(q, {Sym::Algebra}, "an algebra");
            break;
        case QueryOp::FormalSum:
            arg(q, {Sym::Elem}, "an element");
            break;
        case QueryOp::RepSub:
        case QueryOp::RepSuper: {
            const Symbol f = arg(q, {Sym::Family}, "a family");
            if (at_word("at")) {
                const Token& at = next();
                if (f.member_kind != Sym::Rep)
                    fail(ErrorKind::Binding, at.pos, "'at' applies to families of representations only");
                Pos vpos = peek().pos;
                ExtValue v = value();
                if (v.is_fin() && (v.fin_value().get_den() != 1 || sgn(v.fin_value()) <= 0))
                    fail(ErrorKind::Domain, vpos, "amplification index " + v.to_string() + " is not a positive integer");
                if (v.is_fin() && !v.fin_value().get_num().fits_slong_p())
                    fail(ErrorKind::Domain, vpos, "amplification index " + v.to_string() + " is too large");
                for (const auto& [member, r] : f.reps) {
                    if (!rep_fits(r, v))
                        fail(ErrorKind::Domain, vpos,
                             "representation '" + member + "' does not fit at index " + v.to_string());
                }
                q.index = v;
            }
            break;
        }
        case QueryOp::OracleCheck: {
            expect(Tok::LParen);
            do {
                if (!q.shape.empty())
                    expect(Tok::Comma);
                q.shape.push_back(small_int(expect(Tok::Int), 1, 64, "matrix size"));
            } while (peek().kind != Tok::RParen);
            expect(Tok::RParen);
            Integer count{1};
            for (long n : q.shape)
                count *= n + 1;
            if (count > 1000)
                fail(ErrorKind::Domain, peek().pos, "shape has " + count.get_str() + " classes; the limit is 1000");
            break;
        }
        }
        expect(Tok::Semi);
        return q;
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::map<std::string, Symbol> syms_;
    std::vector<Pos> arg_pos_;
};

} // namespace

std::string_view op_name(QueryOp op) {
    for (const auto& [name, o] : query_ops) {
        if (o == op)
            return name;
    }
    return "?";
}

Script parse(std::string_view src) { return Parser{lex(src)}.run(); }

} // namespace dimlat::cli
