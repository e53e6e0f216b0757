#include "parser_criterion.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "dimlat/cli/script.hpp"

namespace acceptance {

namespace fs = std::filesystem;
using namespace dimlat::cli;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in{p, std::ios::binary};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<fs::path> scripts_in(const fs::path& dir) {
    std::vector<fs::path> out;
    if (!fs::is_directory(dir))
        return out;
    for (const auto& e : fs::directory_iterator{dir})
        if (e.path().extension() == ".dl")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::string form_of(const StmtBody& b) {
    if (std::holds_alternative<AlgebraStmt>(b))
        return "algebra";
    if (std::holds_alternative<ElemStmt>(b))
        return "elem";
    if (std::holds_alternative<RepStmt>(b))
        return "rep";
    if (std::holds_alternative<FamilyStmt>(b))
        return "family";
    if (std::holds_alternative<DescribedStmt>(b))
        return "described";
    const auto& q = std::get<QueryStmt>(b);
    return std::string{op_name(q.op)} + (q.index ? " at" : "");
}

} // namespace

Result criterion_9(const std::string& corpus_dir, const std::string& dimlat_exe) {
    Result r;
    r.id = 9;
    r.title = "parser round trip, diagnostics and selftest";
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;

    const auto valid = scripts_in(fs::path{corpus_dir} / "valid");
    std::set<std::string> forms;
    std::size_t round_trips = 0;
    for (const auto& p : valid) {
        try {
            auto s1 = parse(slurp(p));
            auto text = print(s1);
            auto s2 = parse(text);
            if (s1 == s2 && print(s2) == text)
                ++round_trips;
            else
                problems.push_back(p.filename().string() + ": round trip changed the script");
            for (const auto& st : s1.stmts)
                forms.insert(form_of(st.body));
        } catch (const std::exception& e) {
            problems.push_back(p.filename().string() + ": " + e.what());
        }
    }
    const std::vector<std::string> required{"algebra",   "elem",       "rep",      "family",    "described",
                                            "leq",       "add",        "meet",     "join",      "sup",
                                            "inf",       "closure",    "in_closure", "is_T0",   "is_T1",
                                            "is_normal", "unit",       "formal_sum", "rep_sub", "rep_super",
                                            "rep_sub at", "oracle_check"};
    for (const auto& f : required)
        if (!forms.count(f))
            problems.push_back("corpus does not cover '" + f + "'");
    if (valid.size() < 20)
        problems.push_back("corpus has " + std::to_string(valid.size()) + " scripts, expected at least 20");

    // Each malformed script starts with "# expect: line N <kind>".
    const std::regex header{R"(#\s*expect:\s*line\s+(\d+)\s+(lexical|syntax|binding|domain))"};
    const auto malformed = scripts_in(fs::path{corpus_dir} / "malformed");
    std::size_t diagnosed = 0;
    for (const auto& p : malformed) {
        const std::string src = slurp(p);
        std::smatch m;
        if (!std::regex_search(src, m, header)) {
            problems.push_back(p.filename().string() + ": missing expect header");
            continue;
        }
        const int line = std::stoi(m[1]);
        const std::string kind = m[2];
        try {
            parse(src);
            problems.push_back(p.filename().string() + ": parsed without error");
        } catch (const ParseError& e) {
            if (e.pos().line == line && kind == kind_name(e.kind()))
                ++diagnosed;
            else
                problems.push_back(p.filename().string() + ": got '" + e.what() + "', expected line " +
                                   std::to_string(line) + " " + kind);
        }
    }
    if (malformed.empty())
        problems.push_back("no malformed cases found");

    const auto s0 = std::chrono::steady_clock::now();
    const std::string cmd = "\"" + dimlat_exe + "\" selftest > /dev/null";
    const int status = std::system(cmd.c_str());
    const double selftest_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
    if (status != 0)
        problems.push_back("dimlat selftest exited with status " + std::to_string(status));
    if (selftest_seconds >= 300)
        problems.push_back("dimlat selftest took " + std::to_string(selftest_seconds) + " s");

    r.passed = problems.empty();
    std::ostringstream d;
    d << round_trips << "/" << valid.size() << " scripts round-trip, " << forms.size() << " statement forms, "
      << diagnosed << "/" << malformed.size() << " malformed inputs diagnosed at the expected line, selftest "
      << (status == 0 ? "exit 0" : "failed") << " in " << static_cast<long>(selftest_seconds + 0.5) << " s";
    if (!problems.empty())
        d << "; first problem: " << problems.front();
    r.detail = d.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace acceptance
