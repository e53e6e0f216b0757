#include <map>

#include "dimlat/cli/script.hpp"

namespace dimlat::cli {

namespace {

struct StmtPrinter {
    const std::map<std::string, std::vector<std::string>>& atoms;

    std::string values(const std::string& alg, const std::vector<ExtValue>& vals) const {
        const auto& ids = atoms.at(alg);
        std::string out = "{";
        for (std::size_t i = 0; i < vals.size(); ++i)
            out += (i ? ", " : " ") + ids[i] + ": " + vals[i].to_string();
        return out + " }";
    }

    std::string operator()(const AlgebraStmt& s) const {
        std::string out = "algebra " + s.name + " {\n";
        for (const auto& a : s.atoms)
            out += "  atom " + a.id + ": " + a.type.to_string() + ";\n";
        return out + "}";
    }
    std::string operator()(const ElemStmt& s) const {
        return "elem " + s.name + " over " + s.algebra + " = " + values(s.algebra, s.values) + ";";
    }
    std::string operator()(const RepStmt& s) const {
        return "rep " + s.name + " over " + s.algebra + " = " + values(s.algebra, s.values) + ";";
    }
    std::string operator()(const FamilyStmt& s) const {
        std::string out = "family " + s.name + " = [";
        for (const auto& m : s.members)
            out += " " + m;
        return out + " ];";
    }
    std::string operator()(const DescribedStmt& s) const {
        const auto& ids = atoms.at(s.algebra);
        std::string out = "family " + s.name + " over " + s.algebra + " described {";
        for (std::size_t i = 0; i < s.sets.size(); ++i)
            out += (i ? ", " : " ") + ids[i] + ": " + s.sets[i].to_string();
        return out + " };";
    }
    std::string operator()(const QueryStmt& q) const { return query_text(q) + ";"; }
};

} // namespace

std::string query_text(const QueryStmt& q) {
    std::string out{op_name(q.op)};
    for (const auto& a : q.args)
        out += " " + a;
    if (q.index)
        out += " at " + q.index->to_string();
    if (!q.shape.empty()) {
        out += " (";
        for (std::size_t i = 0; i < q.shape.size(); ++i)
            out += (i ? ", " : "") + std::to_string(q.shape[i]);
        out += ")";
    }
    return out;
}

std::string print(const Script& s) {
    std::map<std::string, std::vector<std::string>> atoms;
    std::string out;
    for (const auto& st : s.stmts) {
        if (const auto* a = std::get_if<AlgebraStmt>(&st.body)) {
            auto& ids = atoms[a->name];
            for (const auto& atom : a->atoms)
                ids.push_back(atom.id);
        }
        out += std::visit(StmtPrinter{atoms}, st.body) + "\n";
    }
    return out;
}

} // namespace dimlat::cli
