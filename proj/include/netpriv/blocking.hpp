#pragma once

#include <optional>
#include <vector>

#include "netpriv/fobs.hpp"
#include "netpriv/numerics.hpp"
#include "netpriv/spectral.hpp"

namespace netpriv {

/// A minimal set Delta inside an allowed index set T whose removal from T drops
/// rank [X_i]_T by exactly one, together with the null-space directions it unlocks.
struct CandidateSet {
    std::size_t eigen_index = 0;
    IndexSet delta;
    /// Orthonormal basis of null(stack{A - lambda I, I^{T \ delta}}).
    MatrixXc witness;

    Index cardinality() const { return static_cast<Index>(delta.size()); }
};

/// Per-eigenvalue outcome of the exact solver. `best` is empty when no candidate of this
/// eigenvalue protects F; the eigenvalue then contributes the sentinel [n].
struct EigenChoice {
    std::size_t eigen_index = 0;
    std::optional<CandidateSet> best;
    Index cardinality = 0;
    bool sentinel = false;
};

struct BlockingSolution {
    IndexSet blocked;
    Index cardinality = 0;
    std::vector<std::size_t> witness_eigenvalues;
    std::vector<IndexSet> all_optima;
    std::vector<EigenChoice> per_eigenvalue;
    bool sentinel_used = false;
    /// Rank certificate of the returned set (vector-wise, or for the oracle entry-wise
    /// runs the certificate of the last row).
    ObservabilityReport certificate;
};

struct SolverOptions {
    Index multiplicity_cap = kDefaultMultiplicityCap;
    /// Use eigenvector supports directly for simple eigenvalues.
    bool fast_path = true;
    /// Visit both members of every conjugate pair and require identical candidates.
    bool process_conjugates = false;
    /// Check Eq.-(7)-style feasibility with the literal stacked rank as well, and
    /// require agreement with the witness test.
    bool debug_rank_path = false;
    /// Evaluator used for the final certificate.
    RankRoute certificate_route = RankRoute::Composite;
};

/// Enumerates every minimal Delta within `allowed` that lowers rank [X]_allowed by one.
/// Throws EmptyRank when rank [X]_allowed == 0. Output is ordered by cardinality, then
/// lexicographically.
std::vector<CandidateSet> minimal_deficiency_sets(const EigenSpace& space, std::size_t eigen_index,
                                                  const IndexSet& allowed, const Tolerance& tol);

/// True when some entry of F_hat * witness is nonzero, with F_hat the row-normalized F.
bool witness_detects(const MatrixXr& f, const MatrixXc& witness, const Tolerance& tol);

/// Keeps the candidates whose witness is seen by F.
std::vector<CandidateSet> filter_feasible(const std::vector<CandidateSet>& candidates,
                                          const MatrixXr& f, const Tolerance& tol);

/// Same filter through the literal rank of stack{A - lambda I, I^{[n] \ delta}, F} == n.
std::vector<CandidateSet> filter_feasible_stacked(const std::vector<CandidateSet>& candidates,
                                                  const MatrixXr& a, const Spectrum& spectrum,
                                                  const MatrixXr& f, const Tolerance& tol);

/// Minimum vector-wise blocking set. The returned set is re-checked with the rank
/// criterion; a failed check raises CertificationFailed.
BlockingSolution solve_problem1(const SystemInstance& instance, const Spectrum& spectrum,
                                const Tolerance& tol, const SolverOptions& options = {});

struct RestrictedResult {
    /// f was already unobservable with measurements restricted to T.
    bool already_unobservable = false;
    IndexSet delta;
    std::optional<CandidateSet> candidate;
};

/// Smallest Delta within T such that (A, I^{T \ Delta}, f) is functionally
/// unobservable; empty when it already is. Ties go to the lexicographically smallest
/// Delta, then to the lowest eigenvalue index.
RestrictedResult alg2_restricted(const MatrixXr& a, const RowVectorXr& f, const IndexSet& allowed,
                                 const Spectrum& spectrum, const Tolerance& tol,
                                 const SolverOptions& options = {});

}  // namespace netpriv
