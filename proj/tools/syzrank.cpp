#include <CLI11.hpp>
#include <iostream>

#include "syzrank/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"syzrank: strong Euler homogeneity of hypersurface points via syzygy ranks"};

    syzrank::JobConfig cfg;
    std::string vars_csv;

    app.add_option("--ambient", cfg.ambient, "pn:<n> or toric:<fan file>")->required();
    app.add_option("--poly", cfg.poly, "hypersurface polynomial")->required();
    app.add_option("--vars", vars_csv, "comma-separated variable names")->required();
    // allow_extra_args(false) keeps bracketed point literals intact
    app.add_option("--point", cfg.points, "point to classify (repeatable)")
        ->allow_extra_args(false);
    app.add_flag("--find-singular", cfg.find_singular,
                 "find rational singular points (projective, field q)");
    app.add_flag("--refine-isolated", cfg.refine_isolated,
                 "quasi-homogeneity refinement at isolated singular points");
    app.add_flag("--oracles", cfg.run_oracles, "run the independent chart oracle per point");
    app.add_flag("--global-check", cfg.global_check,
                 "incidence-variety check: SEH at every point of the divisor");
    app.add_option("--field", cfg.field, "q or fp:<prime> (default q)");
    app.add_option("--format", cfg.format, "text or machine (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::size_t start = 0;
    while (start <= vars_csv.size()) {
        std::size_t cut = vars_csv.find(',', start);
        std::string piece = vars_csv.substr(start, cut == std::string::npos ? cut : cut - start);
        std::size_t b = piece.find_first_not_of(" \t");
        std::size_t e = piece.find_last_not_of(" \t");
        cfg.vars.push_back(b == std::string::npos ? "" : piece.substr(b, e - b + 1));
        if (cut == std::string::npos) break;
        start = cut + 1;
    }

    syzrank::RunOutcome out = syzrank::run_job(cfg);
    if (!out.output.empty()) std::cout << out.output;
    if (!out.error.empty()) std::cerr << out.error;
    return out.exit_code;
}
