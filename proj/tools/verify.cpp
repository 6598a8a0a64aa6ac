#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "v22/v22.hpp"

namespace {

int run_eval(const std::string& expr, const std::string& vars_csv) {
    v22::Vars vars;
    std::string cur;
    for (char c : vars_csv + ",") {
        if (c == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    try {
        v22::MPoly p = v22::parse_poly(expr, vars);
        std::cout << v22::print_poly(p) << "\n";
        return 0;
    } catch (const v22::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for the C*-invariant degree-22 Fano family"};

    std::vector<std::string> check_ids;
    std::vector<std::string> u_strings;
    bool allow_singular = false;
    bool list = false;
    std::string format = "text";
    unsigned jobs = 1;
    std::string eval_expr, eval_vars = "x,y,z,t,w";

    app.add_option("--check", check_ids, "run only the named checks (repeatable)");
    app.add_option("--u", u_strings, "also run at rational parameter values P/Q (repeatable)");
    app.add_flag("--allow-singular", allow_singular,
                 "admit u = 1 (singular quadric); affected checks are skipped");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--jobs", jobs, "parallel check execution")->check(CLI::PositiveNumber);
    app.add_flag("--list", list, "list the check registry and exit");
    app.add_option("--eval", eval_expr, "parse and canonically print a polynomial expression");
    app.add_option("--vars", eval_vars, "comma-separated variable list for --eval");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!eval_expr.empty()) return run_eval(eval_expr, eval_vars);

    if (list) {
        for (const auto& info : v22::list_checks())
            std::cout << info.id << "\n    " << info.description << "\n    [" << info.paper_ref
                      << "]\n";
        return 0;
    }

    v22::RunConfig cfg;
    cfg.selected = check_ids;
    cfg.allow_singular = allow_singular;
    cfg.format = format;
    cfg.jobs = jobs;
    for (const auto& s : u_strings) {
        v22::Rat u;
        try {
            u = v22::rat_from_string(s);
        } catch (const v22::DomainError&) {
            std::cerr << "bad rational parameter: " << s << "\n";
            return 2;
        }
        if ((u == v22::Rat(0) || u == v22::Rat(1)) && !allow_singular) {
            std::cerr << "parameter " << s << " is excluded (pass --allow-singular for u=1)\n";
            return 2;
        }
        cfg.u_values.push_back(u);
    }

    v22::Catalog cat;
    v22::Report rep = v22::run_checks(cat, cfg);
    if (cfg.selected.empty() == false && rep.results.empty()) {
        std::cerr << "no checks matched the selection\n";
        return 2;
    }
    std::cout << (format == "structured" ? v22::emit_structured(rep) : v22::emit_text(rep));
    return rep.all_pass() ? 0 : 1;
}
