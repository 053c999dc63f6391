#pragma once

#include <map>
#include <vector>

#include "netpriv/blocking.hpp"

namespace netpriv {

struct GreedyStep {
    Index round = 0;
    IndexSet allowed_before;               // T_k
    std::map<Index, IndexSet> evaluated;   // remaining row j -> Delta*_kj
    Index chosen_row = 0;
    IndexSet chosen_delta;
    IndexSet allowed_after;                // T_{k+1}
    std::vector<Index> rows_left;          // functional rows still unprotected afterwards
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    IndexSet final_allowed;
    IndexSet blocked;
};

struct GreedyResult {
    BlockingSolution solution;
    GreedyTrace trace;
    /// Union of the per-row minimum vector-wise solutions, kept for comparison.
    IndexSet naive_union;
};

/// Entry-wise protection by repeatedly protecting the cheapest remaining row of F.
/// Rows that are already unprotectable at the current T are retired in the same round,
/// each as its own zero-cost step. The result is certified entry-wise; a failure raises
/// CertificationFailed.
GreedyResult solve_problem2_greedy(const SystemInstance& instance, const Spectrum& spectrum,
                                   const Tolerance& tol, const SolverOptions& options = {});

}  // namespace netpriv
