#include "cli/report.hpp"

#include <cmath>
#include <sstream>

namespace netpriv::cli {

using nlohmann::json;

namespace {

// Margins can be infinite when a decision had nothing to compare against.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string complex_text(const json& z) {
    std::ostringstream out;
    out << z.at("re").get<double>();
    const double im = z.at("im").get<double>();
    if (im != 0.0) out << (im > 0 ? "+" : "-") << std::abs(im) << "i";
    return out.str();
}

std::string set_text(const json& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i].get<Index>());
    }
    return out + "}";
}

void certificate_text(std::ostream& out, const json& cert) {
    for (const auto& c : cert.at("per_eigenvalue")) {
        out << "  lambda=" << complex_text(c.at("lambda")) << " rank[A-lI;C;F]=" << c.at("rank_with_f")
            << " rank[A-lI;C]=" << c.at("rank_without_f");
        if (!c.at("margin").is_null()) out << " margin=" << c.at("margin").get<double>();
        if (c.at("violated").get<bool>()) out << " (violated)";
        out << "\n";
    }
}

}  // namespace

json set_json(const IndexSet& s) {
    json out = json::array();
    for (Index i : s) out.push_back(i + 1);
    return out;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json tolerance_json(const Tolerance& tol) {
    return {{"rank_rel", tol.rank_rel},
            {"rank_abs", tol.rank_abs},
            {"cluster_rel", tol.cluster_rel},
            {"support_rel", tol.support_rel}};
}

json spectrum_json(const Spectrum& spectrum) {
    json spaces = json::array();
    for (const auto& s : spectrum.spaces)
        spaces.push_back({{"lambda", complex_json(s.lambda)},
                          {"multiplicity", s.multiplicity},
                          {"support", set_json(s.support)}});
    return {{"n", spectrum.n},
            {"diagonalizable", spectrum.diagonalizable},
            {"max_multiplicity", spectrum.max_multiplicity},
            {"eigenvalues", spaces}};
}

json certificate_json(const ObservabilityReport& report) {
    json per = json::array();
    for (const auto& c : report.per_eigenvalue)
        per.push_back({{"eigen_index", c.eigen_index + 1},
                       {"lambda", complex_json(c.lambda)},
                       {"rank_with_f", c.rank_with_f},
                       {"rank_without_f", c.rank_without_f},
                       {"margin", finite_or_null(c.margin)},
                       {"violated", c.violated()}});
    json out = {{"observable", report.observable}, {"per_eigenvalue", per}};
    out["violating_eigen_index"] =
        report.violating ? json(report.per_eigenvalue[*report.violating].eigen_index + 1) : json(nullptr);
    return out;
}

json solution_json(const BlockingSolution& solution) {
    json optima = json::array();
    for (const auto& s : solution.all_optima) optima.push_back(set_json(s));
    json witnesses = json::array();
    for (auto w : solution.witness_eigenvalues) witnesses.push_back(w + 1);
    json per = json::array();
    for (const auto& choice : solution.per_eigenvalue)
        per.push_back({{"eigen_index", choice.eigen_index + 1},
                       {"cardinality", choice.cardinality},
                       {"best", choice.best ? set_json(choice.best->delta) : json(nullptr)},
                       {"sentinel", choice.sentinel}});
    return {{"blocked", set_json(solution.blocked)},
            {"cardinality", solution.cardinality},
            {"witness_eigenvalues", witnesses},
            {"all_optima", optima},
            {"sentinel_used", solution.sentinel_used},
            {"per_eigenvalue", per}};
}

json trace_json(const GreedyTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json evaluated = json::object();
        for (const auto& [row, delta] : step.evaluated) evaluated[std::to_string(row + 1)] = set_json(delta);
        json rows_left = json::array();
        for (Index r : step.rows_left) rows_left.push_back(r + 1);
        steps.push_back({{"round", step.round + 1},
                         {"allowed_before", set_json(step.allowed_before)},
                         {"evaluated", evaluated},
                         {"chosen_row", step.chosen_row + 1},
                         {"chosen_delta", set_json(step.chosen_delta)},
                         {"allowed_after", set_json(step.allowed_after)},
                         {"rows_left", rows_left}});
    }
    return {{"steps", steps},
            {"final_allowed", set_json(trace.final_allowed)},
            {"blocked", set_json(trace.blocked)}};
}

json rational_matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json reduction_json(const ReductionInstance& inst) {
    json gamma = json::array();
    for (Index i = 0; i < inst.n(); ++i) gamma.push_back(inst.gamma(i, i).str());
    return {{"n", inst.n()},
            {"k", inst.k()},
            {"beta_max", inst.beta_max.str()},
            {"beta_perp_max", inst.beta_perp_max.str()},
            {"eta_star", inst.eta_star.str()},
            {"alpha", inst.alpha.str()},
            {"w_perp", rational_matrix_json(inst.w_perp)},
            {"p", rational_matrix_json(inst.p)},
            {"gamma_diagonal", gamma},
            {"a", rational_matrix_json(inst.a)},
            {"f", rational_matrix_json(inst.f)}};
}

std::string render_text(const json& report) {
    std::ostringstream out;
    if (report.contains("error")) {
        out << "error: " << report["error"].at("message").get<std::string>() << "\n";
        return out.str();
    }
    const json& input = report.at("input");
    out << "netpriv " << report.at("verb").get<std::string>();
    if (input.contains("n")) out << "  n=" << input["n"];
    if (input.contains("problem")) out << "  problem=" << input["problem"].get<std::string>();
    if (input.contains("privacy")) out << "  privacy=" << input["privacy"].get<std::string>();
    out << "\n";

    if (report.contains("spectrum")) {
        out << "spectrum:\n";
        for (const auto& s : report["spectrum"].at("eigenvalues"))
            out << "  lambda=" << complex_text(s.at("lambda")) << " mult=" << s.at("multiplicity")
                << " support=" << set_text(s.at("support")) << "\n";
    }
    if (report.contains("solution")) {
        const json& sol = report["solution"];
        out << "blocked: " << set_text(sol.at("blocked")) << " (cardinality " << sol.at("cardinality")
            << ")\n";
        out << "optima:";
        for (const auto& s : sol.at("all_optima")) out << " " << set_text(s);
        out << "\n";
        if (sol.at("sentinel_used").get<bool>()) out << "note: no eigenvalue admits a smaller set; all nodes blocked\n";
    }
    if (report.contains("trace")) {
        out << "greedy trace:\n";
        for (const auto& step : report["trace"].at("steps"))
            out << "  round " << step.at("round") << ": row " << step.at("chosen_row") << " delta "
                << set_text(step.at("chosen_delta")) << " T -> " << set_text(step.at("allowed_after"))
                << "\n";
        out << "naive union: " << set_text(report.at("naive_union")) << "\n";
    }
    if (report.contains("entry_protected")) {
        out << "entry-wise protected:";
        for (const auto& b : report["entry_protected"]) out << " " << (b.get<bool>() ? "yes" : "no");
        out << "\n";
    }
    if (report.contains("certificate")) {
        const json& cert = report["certificate"];
        out << "certificate: "
            << (cert.at("observable").get<bool>() ? "functionally observable" : "not observable (protected)")
            << "\n";
        certificate_text(out, cert);
    }
    if (report.contains("observable"))
        out << "functionally observable: " << (report["observable"].get<bool>() ? "yes" : "no") << "\n";
    if (report.contains("oracle")) {
        const json& o = report["oracle"];
        out << "oracle: cardinality " << o.at("cardinality") << " blocked " << set_text(o.at("blocked"))
            << (o.at("agrees").get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    if (report.contains("reduction")) {
        const json& r = report["reduction"];
        out << "reduction: n=" << r.at("n") << " k=" << r.at("k") << " eta*=" << r.at("eta_star").get<std::string>()
            << " alpha=" << r.at("alpha").get<std::string>() << "\n";
        out << "exact AP = P Gamma: " << (report.at("exact_similarity").get<bool>() ? "yes" : "no") << "\n";
    }
    if (report.contains("verification")) {
        const json& v = report["verification"];
        out << "degenerate: " << (v.at("degenerate").get<bool>() ? "yes" : "no") << "  optimum: "
            << v.at("optimum") << "  threshold n-k: " << v.at("threshold")
            << "  agreement: " << (v.at("agreement").get<bool>() ? "yes" : "no") << "\n";
        if (v.at("conditioning_warning").get<bool>()) out << "warning: alpha^n exceeds 2^53\n";
    }
    return out.str();
}

}  // namespace netpriv::cli
