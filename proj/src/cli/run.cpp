#include "cli/run.hpp"

#include <chrono>
#include <cstdlib>

#include "cli/report.hpp"
#include "netpriv/oracle.hpp"

namespace netpriv::cli {

using nlohmann::json;

namespace {

const char* verb_name(Verb v) {
    switch (v) {
        case Verb::Analyze: return "analyze";
        case Verb::Check: return "check";
        case Verb::Oracle: return "oracle";
        case Verb::Reduce: return "reduce";
    }
    return "";
}

struct Loaded {
    SystemInstance instance;
    Spectrum spectrum;
};

Loaded load(const Request& req, const Tolerance& tol, json& report) {
    ParsedSystem parsed = parse_system(req.system, req.system_format);
    const Index n = parsed.a.rows();
    MatrixXr f = build_privacy(req.privacy, n);
    SystemInstance instance(std::move(parsed.a), std::move(f), std::move(parsed.labels));

    json& input = report["input"];
    input["system"] = req.system.filename().string();
    input["n"] = n;
    input["r"] = instance.r();
    input["privacy"] = req.privacy;
    if (!instance.labels().empty()) input["labels"] = instance.labels();

    Spectrum spectrum = compute_spectrum(instance.A(), tol, req.max_multiplicity);
    report["spectrum"] = spectrum_json(spectrum);
    return {std::move(instance), std::move(spectrum)};
}

SolverOptions solver_options(const Request& req) {
    SolverOptions opt;
    opt.multiplicity_cap = req.max_multiplicity;
    opt.debug_rank_path = req.debug_rank_path;
    if (req.debug_rank_path) opt.process_conjugates = true;
    return opt;
}

json oracle_json(const BlockingSolution& oracle, Index solver_cardinality) {
    json optima = json::array();
    for (const auto& s : oracle.all_optima) optima.push_back(set_json(s));
    return {{"cardinality", oracle.cardinality},
            {"blocked", set_json(oracle.blocked)},
            {"all_optima", optima},
            {"gap", solver_cardinality - oracle.cardinality},
            {"agrees", solver_cardinality == oracle.cardinality}};
}

void analyze(const Request& req, const Tolerance& tol, json& report) {
    const Loaded sys = load(req, tol, report);
    const SolverOptions opt = solver_options(req);
    if (req.problem == Problem::Vector) {
        const BlockingSolution sol = solve_problem1(sys.instance, sys.spectrum, tol, opt);
        report["solution"] = solution_json(sol);
        report["certificate"] = certificate_json(sol.certificate);
        if (req.oracle)
            report["oracle"] = oracle_json(
                brute_force_problem1(sys.instance, sys.spectrum, tol, req.oracle_max_n), sol.cardinality);
    } else {
        const GreedyResult res = solve_problem2_greedy(sys.instance, sys.spectrum, tol, opt);
        report["solution"] = solution_json(res.solution);
        report["trace"] = trace_json(res.trace);
        report["naive_union"] = set_json(res.naive_union);
        report["entry_protected"] =
            is_entry_protected(sys.instance, res.solution.blocked, sys.spectrum, tol);
        if (req.oracle)
            report["oracle"] = oracle_json(
                brute_force_problem2(sys.instance, sys.spectrum, tol, req.oracle_max_n),
                res.solution.cardinality);
    }
}

void check(const Request& req, const Tolerance& tol, json& report) {
    const Loaded sys = load(req, tol, report);
    const Index n = sys.instance.n();
    MatrixXr c;
    if (req.output_matrix) {
        c = parse_output_matrix(*req.output_matrix);
        if (c.cols() != n)
            throw Error(ErrorCode::DimensionMismatch,
                        "C has " + std::to_string(c.cols()) + " columns, expected " + std::to_string(n));
        report["input"]["output"] = "explicit";
    } else {
        const IndexSet blocked = req.blocked ? parse_index_list(*req.blocked, n) : IndexSet{};
        c = Measurement::blocked(blocked, n).matrix(n);
        report["input"]["blocked"] = set_json(blocked);
    }
    const RankRoute route = req.debug_rank_path ? RankRoute::Stacked : RankRoute::Composite;
    const ObservabilityReport cert =
        functional_observability(sys.instance.A(), c, sys.instance.F(), sys.spectrum, tol, route);
    report["observable"] = cert.observable;
    report["certificate"] = certificate_json(cert);
    json rows = json::array();
    for (Index i = 0; i < sys.instance.r(); ++i)
        rows.push_back(functional_observability(sys.instance.A(), c, sys.instance.F().row(i),
                                                sys.spectrum, tol, route)
                           .observable);
    report["row_observable"] = rows;
}

void oracle(const Request& req, const Tolerance& tol, json& report) {
    const Loaded sys = load(req, tol, report);
    const BlockingSolution sol =
        req.problem == Problem::Vector
            ? brute_force_problem1(sys.instance, sys.spectrum, tol, req.oracle_max_n)
            : brute_force_problem2(sys.instance, sys.spectrum, tol, req.oracle_max_n);
    report["solution"] = solution_json(sol);
    report["certificate"] = certificate_json(sol.certificate);
}

void reduce(const Request& req, const Tolerance& tol, json& report) {
    const RationalMatrix w = parse_w(req.w);
    report["input"]["w"] = req.w.filename().string();
    const ReductionInstance inst = build_reduction_instance(w);
    report["reduction"] = reduction_json(inst);
    report["exact_similarity"] = inst.a * inst.p == inst.p * inst.gamma;
    if (req.verify) {
        const ReductionReport r = verify_reduction(w, tol, req.oracle_max_n);
        report["verification"] = {{"degenerate", r.degenerate},
                                  {"optimum", r.optimum},
                                  {"optimum_set", set_json(r.optimum_set)},
                                  {"threshold", r.threshold},
                                  {"agreement", r.agreement},
                                  {"conditioning_warning", r.conditioning_warning}};
    }
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotDiagonalizable:
        case ErrorCode::MultiplicityBoundExceeded:
        case ErrorCode::ZeroFunctional:
        case ErrorCode::RankDeficient:
        case ErrorCode::EmptyRank:
        case ErrorCode::TooLarge:
        case ErrorCode::CertificationFailed:
            return 2;
        default:
            return 1;
    }
}

Tolerance resolve_tolerance(const Request& request) {
    Tolerance tol;
    if (request.tol_rank) {
        tol.rank_rel = *request.tol_rank;
    } else if (const char* env = std::getenv("NETPRIV_TOL_RANK"); env && *env) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (*end != '\0') throw Error(ErrorCode::ParseError, "NETPRIV_TOL_RANK is not a number");
        tol.rank_rel = v;
    }
    if (request.tol_cluster) tol.cluster_rel = *request.tol_cluster;
    tol.validate();
    return tol;
}

Outcome run(const Request& request) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    json& report = out.report;
    report["format_version"] = kFormatVersion;
    report["verb"] = verb_name(request.verb);
    report["input"] = json::object();
    try {
        const Tolerance tol = resolve_tolerance(request);
        report["input"]["tolerance"] = tolerance_json(tol);
        switch (request.verb) {
            case Verb::Analyze:
                report["input"]["problem"] = request.problem == Problem::Vector ? "vector" : "entry";
                analyze(request, tol, report);
                break;
            case Verb::Check: check(request, tol, report); break;
            case Verb::Oracle:
                report["input"]["problem"] = request.problem == Problem::Vector ? "vector" : "entry";
                oracle(request, tol, report);
                break;
            case Verb::Reduce: reduce(request, tol, report); break;
        }
    } catch (const Error& e) {
        out.exit_code = exit_code_for(e.code());
        report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    return out;
}

std::string format_outcome(const Outcome& outcome, OutputFormat format) {
    if (format == OutputFormat::Json) return outcome.report.dump(2) + "\n";
    return render_text(outcome.report);
}

}  // namespace netpriv::cli
