#include "netpriv/greedy.hpp"

namespace netpriv {

GreedyResult solve_problem2_greedy(const SystemInstance& instance, const Spectrum& spectrum,
                                   const Tolerance& tol, const SolverOptions& options) {
    const Index n = instance.n();
    const MatrixXr& f = instance.F();

    GreedyResult out;
    IndexSet allowed = full_set(n);
    std::vector<Index> rows_left;
    for (Index j = 0; j < instance.r(); ++j) rows_left.push_back(j);

    Index round = 0;
    while (!allowed.empty() && !rows_left.empty()) {
        std::map<Index, IndexSet> evaluated;
        std::vector<Index> free_rows;
        Index best_row = -1;
        for (Index j : rows_left) {
            const RestrictedResult r =
                alg2_restricted(instance.A(), f.row(j), allowed, spectrum, tol, options);
            evaluated[j] = r.delta;
            if (r.delta.empty()) {
                free_rows.push_back(j);
            } else if (best_row < 0 || r.delta.size() < evaluated[best_row].size()) {
                best_row = j;
            }
        }

        auto record = [&](Index row, const IndexSet& delta) {
            GreedyStep step;
            step.round = round;
            step.allowed_before = allowed;
            step.evaluated = evaluated;
            step.chosen_row = row;
            step.chosen_delta = delta;
            allowed = set_difference(allowed, delta);
            std::erase(rows_left, row);
            step.allowed_after = allowed;
            step.rows_left = rows_left;
            out.trace.steps.push_back(std::move(step));
        };

        for (Index j : free_rows) record(j, {});
        if (best_row >= 0) record(best_row, evaluated[best_row]);
        ++round;
    }

    out.trace.final_allowed = allowed;
    out.trace.blocked = set_difference(full_set(n), allowed);

    BlockingSolution& sol = out.solution;
    sol.blocked = out.trace.blocked;
    sol.cardinality = static_cast<Index>(sol.blocked.size());
    sol.all_optima = {sol.blocked};

    const MatrixXr c = Measurement::blocked(sol.blocked, n).matrix(n);
    for (Index i = 0; i < instance.r(); ++i) {
        const ObservabilityReport rep = functional_observability(
            instance.A(), c, f.row(i), spectrum, tol, options.certificate_route);
        if (rep.observable)
            throw Error(ErrorCode::CertificationFailed,
                        "greedy result leaves row " + std::to_string(i + 1) + " of F inferable");
        sol.certificate = rep;
    }

    for (Index i = 0; i < instance.r(); ++i) {
        const SystemInstance single = instance.with_functional(f.row(i));
        const BlockingSolution p1 = solve_problem1(single, spectrum, tol, options);
        out.naive_union = set_union(out.naive_union, p1.blocked);
    }
    return out;
}

}  // namespace netpriv
