#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/run.hpp"

using namespace netpriv;
using namespace netpriv::cli;

namespace {

void add_common(CLI::App* app, Request& req) {
    app->add_option("--tol-rank", req.tol_rank, "Relative singular-value threshold for rank decisions");
    app->add_option("--tol-cluster", req.tol_cluster, "Relative radius for merging eigenvalues");
    app->add_option("--format", req.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::Json}, {"text", OutputFormat::Text}}));
}

void add_system(CLI::App* app, Request& req) {
    app->add_option("system", req.system, "Matrix JSON or edge-list file")->required();
    app->add_option("--input-format", req.system_format, "System file format (default: by extension)")
        ->transform(CLI::CheckedTransformer(std::map<std::string, SystemFormat>{
            {"auto", SystemFormat::Auto}, {"matrix", SystemFormat::Matrix}, {"edges", SystemFormat::EdgeList}}));
    app->add_option("--privacy", req.privacy,
                    "full | average | targets=i,... | clusters=[S1;S2;...] | file=path");
    app->add_option("--max-multiplicity", req.max_multiplicity, "Largest geometric multiplicity accepted");
    app->add_flag("--debug-rank-path", req.debug_rank_path, "Cross-check with the literal stacked rank");
    add_common(app, req);
}

void add_problem(CLI::App* app, Request& req) {
    app->add_option("--problem", req.problem, "vector or entry protection")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Problem>{{"vector", Problem::Vector}, {"entry", Problem::Entry}}));
    app->add_option("--oracle-max-n", req.oracle_max_n, "Largest n the brute-force oracle accepts");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Functional observability and minimum node blocking for network privacy"};
    app.require_subcommand(1);
    Request req;

    auto* analyze = app.add_subcommand("analyze", "Minimum blocking set for a privacy functional");
    add_system(analyze, req);
    add_problem(analyze, req);
    analyze->add_flag("--oracle", req.oracle, "Compare against brute force");

    auto* check = app.add_subcommand("check", "Functional observability of (A, C, F)");
    add_system(check, req);
    auto* c_opt = check->add_option("--output-matrix", req.output_matrix, "JSON file {\"C\": [[...]]}");
    check->add_option("--blocked", req.blocked, "1-based blocked nodes, C = I without them")->excludes(c_opt);

    auto* oracle = app.add_subcommand("oracle", "Brute-force minimum blocking set (small n)");
    add_system(oracle, req);
    add_problem(oracle, req);

    auto* reduce = app.add_subcommand("reduce", "Hardness instance from an integer matrix W");
    reduce->add_option("w", req.w, "JSON file {\"W\": [[...]]}")->required();
    reduce->add_flag("--verify", req.verify, "Solve the instance and compare with degeneracy of W");
    reduce->add_option("--oracle-max-n", req.oracle_max_n, "Largest n the brute-force oracle accepts");
    add_common(reduce, req);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (analyze->parsed()) req.verb = Verb::Analyze;
    if (check->parsed()) req.verb = Verb::Check;
    if (oracle->parsed()) req.verb = Verb::Oracle;
    if (reduce->parsed()) req.verb = Verb::Reduce;

    const Outcome outcome = run(req);
    std::cout << format_outcome(outcome, req.format);
    if (outcome.report.contains("error"))
        std::cerr << "netpriv: " << outcome.report["error"]["message"].get<std::string>() << "\n";
    return outcome.exit_code;
}
