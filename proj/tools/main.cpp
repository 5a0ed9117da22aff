// SPDX-License-Identifier: MIT
//
// Command line front end: delta / audit / verify / report.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or budget error.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypcone/errors.hpp"
#include "hypcone/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"finite hyperbolic-graph geometry toolkit"};
    app.require_subcommand(1);

    hypcone::RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph_file, "graph JSON file");
        sub->add_option("--gen", cfg.gen_spec, "free-product spec, e.g. Z2*Z3");
        sub->add_option("--radius", cfg.radius, "truncation radius for --gen");
        sub->add_option("--base", cfg.base, "basepoint vertex id");
        sub->add_option("--word", cfg.word, "group word, e.g. a*b^-1");
        sub->add_option("--delta", cfg.delta_override, "assume this delta instead of measuring");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", cfg.seed, "sampling seed");
        sub->add_option("--budget-vertices", cfg.budget_vertices, "vertex-count cap");
        sub->add_option("--budget-loops", cfg.budget_loops, "sweep step cap");
    };

    CLI::App* sub_delta = app.add_subcommand("delta", "measure the hyperbolicity constant");
    add_common(sub_delta);
    CLI::App* sub_audit = app.add_subcommand("audit", "exhaustive angle and cone sweeps");
    add_common(sub_audit);
    CLI::App* sub_verify = app.add_subcommand("verify", "sampled structure verification");
    add_common(sub_verify);
    sub_verify->add_flag("--tree-oracle", cfg.tree_oracle,
                         "exhaustive partition oracle (trees only)");
    CLI::App* sub_report = app.add_subcommand("report", "fixed fixture battery");
    add_common(sub_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    hypcone::Report rep;
    try {
        if (sub_delta->parsed())
            rep = hypcone::cmd_delta(cfg);
        else if (sub_audit->parsed())
            rep = hypcone::cmd_audit(cfg);
        else if (sub_verify->parsed())
            rep = hypcone::cmd_verify(cfg);
        else
            rep = hypcone::cmd_report(cfg);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    std::string text = hypcone::render_report(rep, cfg.format);
    if (cfg.out_path.empty()) {
        std::cout << text << std::flush;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << cfg.out_path << "\n";
            return 2;
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
    return hypcone::exit_code(rep);
}
