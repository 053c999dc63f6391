#include "netpriv/blocking.hpp"

#include <set>

namespace netpriv {

namespace {

// Eigenbases are orthonormal, so unit scale is the natural reference for rank tests on
// their row subsets.
constexpr double kBasisScale = 1.0;

Index subset_rank(const MatrixXc& basis, const IndexSet& rows, const Tolerance& tol) {
    if (rows.empty()) return 0;
    return numerical_rank(select_rows(basis, rows), tol, kBasisScale);
}

/// X * null([X]_rows): basis of null(stack{A - lambda I, I^rows}).
MatrixXc restricted_kernel(const MatrixXc& basis, const IndexSet& rows, const Tolerance& tol) {
    if (rows.empty()) return basis;
    const MatrixXc coeffs = null_space(select_rows(basis, rows), tol, kBasisScale).basis;
    return basis * coeffs;
}

/// Calls `visit` with every size-`size` subset of `items`, in lexicographic order.
template <typename Visit>
void for_each_combination(const IndexSet& items, std::size_t size, Visit&& visit) {
    const std::size_t n = items.size();
    if (size > n) return;
    std::vector<std::size_t> pos(size);
    for (std::size_t i = 0; i < size; ++i) pos[i] = i;
    IndexSet subset(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) subset[i] = items[pos[i]];
        visit(subset);
        std::size_t i = size;
        while (i > 0 && pos[i - 1] == n - size + i - 1) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
}

void check_preconditions(const Spectrum& spectrum, Index n, const SolverOptions& options) {
    if (!spectrum.diagonalizable)
        throw Error(ErrorCode::NotDiagonalizable, "solver requires diagonalizable A");
    if (spectrum.n != n) throw Error(ErrorCode::DimensionMismatch, "spectrum does not match A");
    if (spectrum.max_multiplicity > options.multiplicity_cap)
        throw Error(ErrorCode::MultiplicityBoundExceeded,
                    "geometric multiplicity " + std::to_string(spectrum.max_multiplicity) +
                        " exceeds cap " + std::to_string(options.multiplicity_cap));
}

std::vector<CandidateSet> support_candidate(const EigenSpace& space, std::size_t eigen_index,
                                            const Tolerance& tol) {
    CandidateSet c;
    c.eigen_index = eigen_index;
    c.delta = eigenbasis_support(space, tol);
    c.witness = space.basis;
    return {c};
}

std::vector<IndexSet> deltas_of(const std::vector<CandidateSet>& cands) {
    std::vector<IndexSet> out;
    for (const auto& c : cands) out.push_back(c.delta);
    return out;
}

}  // namespace

std::vector<CandidateSet> minimal_deficiency_sets(const EigenSpace& space, std::size_t eigen_index,
                                                  const IndexSet& allowed, const Tolerance& tol) {
    const MatrixXc& x = space.basis;
    const Index full_rank = subset_rank(x, allowed, tol);
    if (full_rank == 0)
        throw Error(ErrorCode::EmptyRank, "eigenbasis rows inside the allowed set are all zero");
    const Index target = full_rank - 1;

    // Each closure is a maximal rank-(r-1) row set (a flat). An independent seed lying
    // inside an already found flat closes to that same flat, so it is skipped.
    std::vector<IndexSet> flats;
    for_each_combination(allowed, static_cast<std::size_t>(target), [&](const IndexSet& seed) {
        for (const auto& flat : flats)
            if (is_subset(seed, flat)) return;
        if (subset_rank(x, seed, tol) != target) return;
        IndexSet closure;
        IndexSet probe = seed;
        for (Index k : allowed) {
            if (std::binary_search(seed.begin(), seed.end(), k)) {
                closure.push_back(k);
                continue;
            }
            probe = seed;
            probe.insert(std::upper_bound(probe.begin(), probe.end(), k), k);
            if (subset_rank(x, probe, tol) == target) closure.push_back(k);
        }
        flats.push_back(std::move(closure));
    });

    std::vector<CandidateSet> out;
    std::set<IndexSet> seen;
    for (const auto& flat : flats) {
        IndexSet delta = set_difference(allowed, flat);
        if (!seen.insert(delta).second) continue;
        CandidateSet c;
        c.eigen_index = eigen_index;
        c.witness = restricted_kernel(x, flat, tol);
        c.delta = std::move(delta);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CandidateSet& a, const CandidateSet& b) {
        return shortlex_less(a.delta, b.delta);
    });
    return out;
}

bool witness_detects(const MatrixXr& f, const MatrixXc& witness, const Tolerance& tol) {
    if (witness.cols() == 0 || f.rows() == 0) return false;
    const MatrixXc seen = normalize_rows(f).cast<Complex>() * witness;
    return numerical_rank(seen, tol, 1.0) > 0;
}

std::vector<CandidateSet> filter_feasible(const std::vector<CandidateSet>& candidates,
                                          const MatrixXr& f, const Tolerance& tol) {
    std::vector<CandidateSet> out;
    for (const auto& c : candidates)
        if (witness_detects(f, c.witness, tol)) out.push_back(c);
    return out;
}

std::vector<CandidateSet> filter_feasible_stacked(const std::vector<CandidateSet>& candidates,
                                                  const MatrixXr& a, const Spectrum& spectrum,
                                                  const MatrixXr& f, const Tolerance& tol) {
    const Index n = a.rows();
    std::vector<CandidateSet> out;
    for (const auto& c : candidates) {
        const MatrixXr measured = selector(set_difference(full_set(n), c.delta), n);
        const EigenCertificate cert = rank_condition(a, spectrum.spaces.at(c.eigen_index).lambda,
                                                     measured, f, tol, RankRoute::Stacked);
        if (cert.rank_with_f == n) out.push_back(c);
    }
    return out;
}

BlockingSolution solve_problem1(const SystemInstance& instance, const Spectrum& spectrum,
                                const Tolerance& tol, const SolverOptions& options) {
    const Index n = instance.n();
    check_preconditions(spectrum, n, options);
    const MatrixXr& f = instance.F();
    const IndexSet everything = full_set(n);

    BlockingSolution sol;
    std::vector<CandidateSet> feasible_all;
    std::vector<std::vector<IndexSet>> feasible_by_space(spectrum.spaces.size());

    for (std::size_t i : spectrum.representatives(options.process_conjugates)) {
        const EigenSpace& space = spectrum.spaces[i];
        const std::vector<CandidateSet> candidates =
            options.fast_path && space.multiplicity == 1
                ? support_candidate(space, i, tol)
                : minimal_deficiency_sets(space, i, everything, tol);

        std::vector<CandidateSet> feasible = filter_feasible(candidates, f, tol);
        if (options.debug_rank_path) {
            const auto stacked = filter_feasible_stacked(candidates, instance.A(), spectrum, f, tol);
            if (deltas_of(stacked) != deltas_of(feasible))
                throw Error(ErrorCode::CertificationFailed,
                            "witness test and stacked-rank test disagree at eigenvalue " +
                                std::to_string(i));
        }
        feasible_by_space[i] = deltas_of(feasible);

        EigenChoice choice;
        choice.eigen_index = i;
        if (feasible.empty()) {
            choice.sentinel = true;
            choice.cardinality = n;
        } else {
            choice.best = feasible.front();
            choice.cardinality = feasible.front().cardinality();
        }
        sol.per_eigenvalue.push_back(std::move(choice));
        feasible_all.insert(feasible_all.end(), feasible.begin(), feasible.end());
    }

    if (options.process_conjugates) {
        for (std::size_t i = 0; i < spectrum.spaces.size(); ++i) {
            const auto& partner = spectrum.spaces[i].conjugate_partner;
            if (partner && feasible_by_space[i] != feasible_by_space[*partner])
                throw Error(ErrorCode::CertificationFailed,
                            "conjugate eigenvalues produced different candidate sets");
        }
    }

    Index best = n;
    for (const auto& choice : sol.per_eigenvalue) best = std::min(best, choice.cardinality);

    std::set<IndexSet> optima;
    for (const auto& c : feasible_all) {
        if (c.cardinality() != best) continue;
        optima.insert(c.delta);
    }
    if (optima.empty()) {
        sol.sentinel_used = true;
        optima.insert(everything);
    }
    sol.all_optima.assign(optima.begin(), optima.end());
    sol.blocked = sol.all_optima.front();
    sol.cardinality = static_cast<Index>(sol.blocked.size());
    for (const auto& c : feasible_all) {
        if (c.delta == sol.blocked &&
            std::find(sol.witness_eigenvalues.begin(), sol.witness_eigenvalues.end(),
                      c.eigen_index) == sol.witness_eigenvalues.end())
            sol.witness_eigenvalues.push_back(c.eigen_index);
    }

    sol.certificate = functional_observability(
        instance.A(), Measurement::blocked(sol.blocked, n).matrix(n), f, spectrum, tol,
        options.certificate_route);
    if (sol.certificate.observable)
        throw Error(ErrorCode::CertificationFailed,
                    "returned blocking set does not violate the rank criterion");
    return sol;
}

RestrictedResult alg2_restricted(const MatrixXr& a, const RowVectorXr& f, const IndexSet& allowed,
                                 const Spectrum& spectrum, const Tolerance& tol,
                                 const SolverOptions& options) {
    const Index n = a.rows();
    check_preconditions(spectrum, n, options);
    if (f.size() != n) throw Error(ErrorCode::DimensionMismatch, "f must have n entries");
    if (f.isZero(0.0)) throw Error(ErrorCode::ZeroFunctional, "functional row is zero");
    const IndexSet t = normalized_set(allowed, n);
    const MatrixXr f_row = f;
    const auto reps = spectrum.representatives(options.process_conjugates);

    RestrictedResult result;
    for (std::size_t i : reps) {
        if (witness_detects(f_row, restricted_kernel(spectrum.spaces[i].basis, t, tol), tol)) {
            result.already_unobservable = true;
            return result;
        }
    }

    for (std::size_t i : reps) {
        const EigenSpace& space = spectrum.spaces[i];
        if (subset_rank(space.basis, t, tol) == 0) continue;
        for (const auto& c : minimal_deficiency_sets(space, i, t, tol)) {
            if (result.candidate && !shortlex_less(c.delta, result.candidate->delta)) break;
            if (witness_detects(f_row, c.witness, tol)) {
                result.candidate = c;
                break;
            }
        }
    }
    // Blocking all of T is always feasible in exact arithmetic (f is nonzero and the
    // eigenbases span C^n); fall back to it if every candidate was rejected numerically.
    result.delta = result.candidate ? result.candidate->delta : t;
    return result;
}

}  // namespace netpriv
