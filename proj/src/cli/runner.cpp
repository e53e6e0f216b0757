#include "dimlat/cli/runner.hpp"

#include <map>
#include <sstream>

#include "dimlat/complattice.hpp"
#include "dimlat/fdoracle.hpp"
#include "dimlat/qot.hpp"
#include "dimlat/representation.hpp"

namespace dimlat::cli {

RunError::RunError(std::size_t query_index, Pos pos, const std::string& message)
    : std::runtime_error("query " + std::to_string(query_index) + " (line " + std::to_string(pos.line) +
                         "): " + message),
      index_{query_index}, pos_{pos} {}

namespace {

struct Family {
    std::vector<std::string> members;
    bool of_reps = false;
};

using Value = std::variant<AlgebraRef, DimElement, RepClass, Family, DescribedFamily>;

class Env {
  public:
    void exec(const Stmt& st, std::ostream& out) {
        std::visit([&](const auto& s) { this->apply(s, out); }, st.body);
    }

    std::size_t queries = 0;

  private:
    void apply(const AlgebraStmt& s, std::ostream&) { vars_.insert_or_assign(s.name, AlgebraDesc::make(s.atoms, s.name)); }

    void apply(const ElemStmt& s, std::ostream&) {
        vars_.insert_or_assign(s.name, DimElement{algebra(s.algebra), s.values, ClassKind::Cone});
    }

    void apply(const RepStmt& s, std::ostream&) { vars_.insert_or_assign(s.name, RepClass{algebra(s.algebra), s.values}); }

    void apply(const FamilyStmt& s, std::ostream&) {
        Family f{s.members, std::holds_alternative<RepClass>(vars_.at(s.members.front()))};
        vars_.insert_or_assign(s.name, std::move(f));
    }

    void apply(const DescribedStmt& s, std::ostream&) {
        vars_.insert_or_assign(s.name, DescribedFamily{algebra(s.algebra), s.sets});
    }

    void apply(const QueryStmt& q, std::ostream& out) {
        ++queries;
        const std::string result = answer(q);
        out << query_text(q) << " => " << result << "\n";
    }

    const AlgebraRef& algebra(const std::string& n) const { return std::get<AlgebraRef>(vars_.at(n)); }
    const DimElement& elem(const std::string& n) const { return std::get<DimElement>(vars_.at(n)); }

    std::vector<DimElement> elems(const Family& f) const {
        std::vector<DimElement> out;
        for (const auto& m : f.members)
            out.push_back(elem(m));
        return out;
    }

    std::vector<RepClass> reps(const Family& f) const {
        std::vector<RepClass> out;
        for (const auto& m : f.members)
            out.push_back(std::get<RepClass>(vars_.at(m)));
        return out;
    }

    FamilySpec family(const std::string& n) const {
        const Value& v = vars_.at(n);
        if (const auto* d = std::get_if<DescribedFamily>(&v))
            return *d;
        return ExplicitFamily{elems(std::get<Family>(v))};
    }

    ClassSetDescriptor class_set(const std::string& n) const {
        const Value& v = vars_.at(n);
        if (const auto* e = std::get_if<DimElement>(&v))
            return ExplicitSet{e->algebra(), {*e}};
        if (const auto* d = std::get_if<DescribedFamily>(&v))
            return ProductSet{d->algebra, d->per_atom};
        auto members = elems(std::get<Family>(v));
        return ExplicitSet{members.front().algebra(), members};
    }

    static std::string boolean(bool b) { return b ? "true" : "false"; }

    std::string answer(const QueryStmt& q) const {
        const auto& a = q.args;
        switch (q.op) {
        case QueryOp::Leq:
            return boolean(d_leq(elem(a[0]), elem(a[1])));
        case QueryOp::Add:
            return d_add(elem(a[0]), elem(a[1])).to_string();
        case QueryOp::Meet:
            return pair_meet(elem(a[0]), elem(a[1])).to_string();
        case QueryOp::Join:
            return pair_join(elem(a[0]), elem(a[1])).to_string();
        case QueryOp::Sup:
        case QueryOp::Inf: {
            auto f = family(a[0]);
            validate_family(f, ClassKind::Cone);
            return (q.op == QueryOp::Sup ? family_sup(f) : family_inf(f)).to_string();
        }
        case QueryOp::Closure:
            return to_string(closure(class_set(a[0])));
        case QueryOp::InClosure:
            return boolean(in_closure(elem(a[0]), class_set(a[1])));
        case QueryOp::IsT0:
            return boolean(is_T0(*algebra(a[0])));
        case QueryOp::IsT1:
            return boolean(is_T1(*algebra(a[0])));
        case QueryOp::IsNormal:
            return boolean(quotient_maps_normal(*algebra(a[0])));
        case QueryOp::Unit:
            return unit(algebra(a[0])).to_string();
        case QueryOp::FormalSum:
            return to_formal_sum(elem(a[0])).to_string();
        case QueryOp::RepSub:
        case QueryOp::RepSuper: {
            const auto& f = std::get<Family>(vars_.at(a[0]));
            const bool sub = q.op == QueryOp::RepSub;
            if (!f.of_reps)
                return (sub ? rep_common_sub(elems(f)) : rep_common_super(elems(f))).to_string();
            auto rs = reps(f);
            RepBound r = q.index ? (sub ? rep_common_sub(rs, *q.index) : rep_common_super(rs, *q.index))
                                 : (sub ? rep_common_sub(rs) : rep_common_super(rs));
            return r.value.to_string() + " in " + r.algebra->name();
        }
        case QueryOp::OracleCheck: {
            auto rep = fd::check_shape(q.shape);
            if (rep.ok())
                return "OK (" + std::to_string(rep.classes) + " classes, all operations agree)";
            std::string out = "FAIL (" + std::to_string(rep.mismatches.size()) + " mismatches)";
            for (const auto& m : rep.mismatches)
                out += "; " + m;
            return out;
        }
        }
        return {};
    }

    std::map<std::string, Value> vars_;
};

} // namespace

void run(const Script& script, std::ostream& out) {
    Env env;
    for (const auto& st : script.stmts) {
        try {
            env.exec(st, out);
        } catch (const std::exception& e) {
            const bool is_query = std::holds_alternative<QueryStmt>(st.body);
            throw RunError(is_query ? env.queries : env.queries + 1, st.pos, e.what());
        }
    }
}

std::string run_to_string(const Script& script) {
    std::ostringstream out;
    run(script, out);
    return out.str();
}

} // namespace dimlat::cli
