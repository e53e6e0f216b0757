#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "dimlat/cli/runner.hpp"
#include "dimlat/cli/script.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in{path, std::ios::binary};
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int load(const std::string& path, dimlat::cli::Script& script) {
    std::string src;
    if (!read_file(path, src)) {
        std::cerr << "dimlat: cannot read '" << path << "'\n";
        return 2;
    }
    try {
        script = dimlat::cli::parse(src);
    } catch (const dimlat::cli::ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << path << ": error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_run(const std::string& path) {
    dimlat::cli::Script script;
    if (int rc = load(path, script))
        return rc;
    try {
        dimlat::cli::run(script, std::cout);
    } catch (const dimlat::cli::RunError& e) {
        std::cout.flush();
        std::cerr << path << ": error in " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_check(const std::string& path, bool print) {
    dimlat::cli::Script script;
    if (int rc = load(path, script))
        return rc;
    if (print)
        std::cout << dimlat::cli::print(script);
    else
        std::cout << path << ": ok (" << script.stmts.size() << " statements)\n";
    return 0;
}

int cmd_selftest() {
    int failed = 0;
    for (const auto& c : acceptance::core_criteria()) {
        auto r = c();
        std::cout << acceptance::format(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "selftest passed" : "selftest failed: " + std::to_string(failed) + " criteria")
              << std::endl;
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimlat: dimension lattices of von Neumann algebras with finite atomic center"};
    app.require_subcommand(1);
    int max_aleph = dimlat::max_aleph();
    app.add_option("--max-aleph", max_aleph, "largest representable aleph index")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();

    std::string file;
    auto* run = app.add_subcommand("run", "parse, check and execute a script");
    run->add_option("file", file, "script file")->required();
    auto* check = app.add_subcommand("check", "parse and check a script without running it");
    check->add_option("file", file, "script file")->required();
    bool print = false;
    check->add_flag("--print", print, "print the canonical form of the script");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance grid");

    CLI11_PARSE(app, argc, argv);
    dimlat::set_max_aleph(max_aleph);

    if (run->parsed())
        return cmd_run(file);
    if (check->parsed())
        return cmd_check(file, print);
    if (selftest->parsed())
        return cmd_selftest();
    return 2;
}
